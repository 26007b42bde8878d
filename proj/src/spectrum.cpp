#include "gpspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gpspec/errors.hpp"

namespace gpspec {

std::string_view to_string(SpectrumKind kind) {
  switch (kind) {
    case SpectrumKind::degree: return "degree";
    case SpectrumKind::adjacency: return "adjacency";
    case SpectrumKind::laplacian: return "laplacian";
  }
  return "unknown";
}

Spectrum::Spectrum(std::vector<double> values, SpectrumKind kind)
    : values_(std::move(values)), kind_(kind) {
  std::sort(values_.begin(), values_.end());
}

void Spectrum::check_laplacian(double tol) const {
  if (values_.empty()) return;
  if (values_.front() < -tol || std::abs(values_.front()) > tol)
    throw NumericalError("Laplacian spectrum minimum " +
                             std::to_string(values_.front()) + " is not 0",
                         0);
}

bool spectra_match(const Spectrum& a, const Spectrum& b, double abs_tol) {
  return a.size() == b.size() && max_abs_difference(a, b) <= abs_tol;
}

double max_abs_difference(const Spectrum& a, const Spectrum& b) {
  if (a.size() != b.size())
    throw ArgumentError("spectrum comparison: size mismatch");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k)
    worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

}  // namespace gpspec
