#pragma once

#include <span>
#include <vector>

#include "gpspec/dense_matrix.hpp"
#include "gpspec/spectrum.hpp"

namespace gpspec {

// Eigenvalues ascending; vectors[k] is the unit eigenvector for values[k].
struct EigenPairs {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
};

// Symmetric eigendecomposition via LAPACK dsyevd (divide and conquer).
// Throws ArgumentError for non-square or asymmetric (> 1e-12) input and
// NumericalError if the solver fails to converge.
EigenPairs eig_symmetric(const DenseMatrix& m);

// Eigenvalues only; cheaper than eig_symmetric for large matrices.
std::vector<double> eigvals_symmetric(const DenseMatrix& m);

// Laplacian spectrum of a graph, checked to have its minimum at 0.
Spectrum laplacian_spectrum(const DenseMatrix& laplacian);
Spectrum adjacency_spectrum(const DenseMatrix& adjacency);

// Pearson correlation of the entries of a and b. Throws UndefinedCorrelation
// when either vector is constant.
double pearson_correlation(std::span<const double> a, std::span<const double> b);

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);

}  // namespace gpspec
