#include "gpspec/exact_spectra.hpp"

#include <string>

#include "gpspec/errors.hpp"

namespace gpspec {
namespace {

void expect_kind(const Spectrum& s, SpectrumKind kind, const char* what) {
  if (s.kind() != kind)
    throw ArgumentError(std::string(what) + ": expected a " + std::string(to_string(kind)) +
                        " spectrum, got " + std::string(to_string(s.kind())));
}

template <class Combine>
Spectrum combine_pairs(const Spectrum& a, const Spectrum& b, SpectrumKind kind, Combine f) {
  std::vector<double> out;
  out.reserve(a.size() * b.size());
  for (double x : a.values())
    for (double y : b.values()) out.push_back(f(x, y));
  return Spectrum(std::move(out), kind);
}

Spectrum compose(ProductKind kind, const Spectrum& a, const Spectrum& b, SpectrumKind sk) {
  switch (kind) {
    case ProductKind::cartesian:
      return combine_pairs(a, b, sk, [](double x, double y) { return x + y; });
    case ProductKind::direct:
      return combine_pairs(a, b, sk, [](double x, double y) { return x * y; });
    case ProductKind::strong:
      return combine_pairs(a, b, sk, [](double x, double y) { return x + y + x * y; });
  }
  throw ArgumentError("unknown product kind");
}

}  // namespace

Spectrum compose_degree_spectrum(ProductKind kind, const Spectrum& d_g, const Spectrum& d_h) {
  expect_kind(d_g, SpectrumKind::degree, "compose_degree_spectrum");
  expect_kind(d_h, SpectrumKind::degree, "compose_degree_spectrum");
  return compose(kind, d_g, d_h, SpectrumKind::degree);
}

Spectrum compose_adjacency_spectrum(ProductKind kind, const Spectrum& lam_g,
                                    const Spectrum& lam_h) {
  expect_kind(lam_g, SpectrumKind::adjacency, "compose_adjacency_spectrum");
  expect_kind(lam_h, SpectrumKind::adjacency, "compose_adjacency_spectrum");
  return compose(kind, lam_g, lam_h, SpectrumKind::adjacency);
}

Spectrum compose_cartesian_laplacian(const Spectrum& mu_g, const Spectrum& mu_h) {
  expect_kind(mu_g, SpectrumKind::laplacian, "compose_cartesian_laplacian");
  expect_kind(mu_h, SpectrumKind::laplacian, "compose_cartesian_laplacian");
  return compose(ProductKind::cartesian, mu_g, mu_h, SpectrumKind::laplacian);
}

}  // namespace gpspec
