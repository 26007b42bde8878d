#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace gpspec {

enum class SpectrumKind { degree, adjacency, laplacian };

std::string_view to_string(SpectrumKind kind);

// Multiset of real eigenvalues (or degrees), always held in ascending order.
class Spectrum {
 public:
  Spectrum() = default;
  Spectrum(std::vector<double> values, SpectrumKind kind);

  const std::vector<double>& values() const noexcept { return values_; }
  SpectrumKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t k) const { return values_[k]; }
  double min() const { return values_.front(); }
  double max() const { return values_.back(); }

  // Throws NumericalError unless the minimum is 0 within `tol` and nothing is
  // below -tol. Only meaningful for spectra of actual Laplacian matrices.
  void check_laplacian(double tol = 1e-9) const;

  bool operator==(const Spectrum&) const = default;

 private:
  std::vector<double> values_;
  SpectrumKind kind_ = SpectrumKind::laplacian;
};

// Positional comparison of two sorted multisets.
bool spectra_match(const Spectrum& a, const Spectrum& b, double abs_tol);
double max_abs_difference(const Spectrum& a, const Spectrum& b);

}  // namespace gpspec
