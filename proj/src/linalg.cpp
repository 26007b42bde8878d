#include "gpspec/linalg.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "gpspec/errors.hpp"

namespace gpspec {
namespace {

constexpr double kSymmetryTol = 1e-12;

void check_symmetric(const DenseMatrix& m) {
  if (!m.is_square())
    throw ArgumentError("eigendecomposition needs a square matrix, got " +
                        std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  if (!m.is_symmetric(kSymmetryTol))
    throw ArgumentError("eigendecomposition needs a symmetric matrix");
}

// Runs dsyevd in place on a copy of m; on return `work` holds eigenvectors
// as columns when jobz == 'V'.
std::vector<double> run_dsyevd(const DenseMatrix& m, char jobz, std::vector<double>& work) {
  const auto n = static_cast<lapack_int>(m.rows());
  std::vector<double> w(m.rows());
  if (n == 0) return w;
  work.assign(m.data().begin(), m.data().end());
  lapack_int info = LAPACKE_dsyevd(LAPACK_ROW_MAJOR, jobz, 'U', n, work.data(), n, w.data());
  if (info < 0)
    throw ArgumentError("dsyevd: illegal argument " + std::to_string(-info));
  if (info > 0)
    throw NumericalError("dsyevd failed to converge (" + std::to_string(info) +
                             " off-diagonal elements did not reach zero)",
                         info);
  return w;
}

}  // namespace

EigenPairs eig_symmetric(const DenseMatrix& m) {
  check_symmetric(m);
  std::vector<double> z;
  EigenPairs out;
  out.values = run_dsyevd(m, 'V', z);
  const std::size_t n = m.rows();
  out.vectors.assign(n, std::vector<double>(n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) out.vectors[k][i] = z[i * n + k];
  return out;
}

std::vector<double> eigvals_symmetric(const DenseMatrix& m) {
  check_symmetric(m);
  std::vector<double> scratch;
  return run_dsyevd(m, 'N', scratch);
}

Spectrum laplacian_spectrum(const DenseMatrix& laplacian) {
  Spectrum s(eigvals_symmetric(laplacian), SpectrumKind::laplacian);
  s.check_laplacian();
  return s;
}

Spectrum adjacency_spectrum(const DenseMatrix& adjacency) {
  return Spectrum(eigvals_symmetric(adjacency), SpectrumKind::adjacency);
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ArgumentError("dot: length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

double pearson_correlation(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ArgumentError("correlation: length mismatch");
  if (a.size() < 2) throw ArgumentError("correlation needs at least two entries");
  const double n = static_cast<double>(a.size());
  double mean_a = 0.0, mean_b = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mean_a += a[i];
    mean_b += b[i];
  }
  mean_a /= n;
  mean_b /= n;
  double saa = 0.0, sbb = 0.0, sab = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - mean_a;
    const double db = b[i] - mean_b;
    saa += da * da;
    sbb += db * db;
    sab += da * db;
  }
  // Relative floor: eigenvector arithmetic leaves ~1e-16 noise on vectors
  // that are constant in exact arithmetic.
  double scale_a = 0.0, scale_b = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    scale_a = std::max(scale_a, std::abs(a[i]));
    scale_b = std::max(scale_b, std::abs(b[i]));
  }
  const double floor_a = 1e-20 * n * std::max(scale_a * scale_a, 1e-300);
  const double floor_b = 1e-20 * n * std::max(scale_b * scale_b, 1e-300);
  if (saa <= floor_a || sbb <= floor_b)
    throw UndefinedCorrelation("correlation undefined for a constant vector");
  const double r = sab / std::sqrt(saa * sbb);
  return std::clamp(r, -1.0, 1.0);
}

}  // namespace gpspec
