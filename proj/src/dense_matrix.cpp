#include "gpspec/dense_matrix.hpp"

#include <cmath>

#include "gpspec/errors.hpp"

namespace gpspec {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> diag) {
  DenseMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

bool DenseMatrix::is_symmetric(double tol) const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
  return true;
}

double DenseMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

double DenseMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

std::vector<double> DenseMatrix::operator*(std::span<const double> x) const {
  if (x.size() != cols_)
    throw ArgumentError("matrix-vector product: dimension mismatch");
  std::vector<double> y(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    const double* r = data_.data() + i * cols_;
    double s = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) s += r[j] * x[j];
    y[i] = s;
  }
  return y;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw ArgumentError("matrix sum: dimension mismatch");
  DenseMatrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += other.data_[k];
  return out;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw ArgumentError("matrix difference: dimension mismatch");
  DenseMatrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= other.data_[k];
  return out;
}

}  // namespace gpspec
