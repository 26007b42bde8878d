#include "gpspec/estimator.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gpspec/errors.hpp"
#include "gpspec/linalg.hpp"
#include "gpspec/rng.hpp"

namespace gpspec {
namespace {

constexpr double kPerturbLow = 0.9;
constexpr double kPerturbHigh = 1.1;

std::vector<double> order_by_perturbed_key(const std::vector<double>& values, bool descending,
                                           std::uint64_t seed) {
  Rng rng = make_rng(seed);
  std::vector<std::pair<double, double>> keyed;  // (key, value)
  keyed.reserve(values.size());
  for (double v : values) keyed.emplace_back(v * uniform_real(rng, kPerturbLow, kPerturbHigh), v);
  std::stable_sort(keyed.begin(), keyed.end(), [descending](const auto& a, const auto& b) {
    return descending ? a.first > b.first : a.first < b.first;
  });
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& kv : keyed) out.push_back(kv.second);
  return out;
}

void check_paired(const PairedFactorSpectra& ps) {
  if (ps.degrees_g.size() != ps.mu_g.size() || ps.degrees_h.size() != ps.mu_h.size())
    throw ArgumentError("degree and Laplacian spectra of a factor differ in size");
}

template <class Formula>
Spectrum evaluate(const PairedFactorSpectra& ps, Formula f) {
  check_paired(ps);
  const auto& dg = ps.degrees_g.values();
  const auto& dh = ps.degrees_h.values();
  std::vector<double> out;
  out.reserve(dg.size() * dh.size());
  for (std::size_t i = 0; i < dg.size(); ++i)
    for (std::size_t j = 0; j < dh.size(); ++j)
      out.push_back(f(ps.mu_g[i], dg[i], ps.mu_h[j], dh[j]));
  return Spectrum(std::move(out), SpectrumKind::laplacian);
}

}  // namespace

std::string_view to_string(OrderingMethod method) {
  switch (method) {
    case OrderingMethod::uncorrelated: return "uncorrelated";
    case OrderingMethod::correlated: return "correlated";
    case OrderingMethod::correlated_randomized: return "correlated_randomized";
    case OrderingMethod::anti_correlated: return "anti_correlated";
    case OrderingMethod::anti_correlated_randomized: return "anti_correlated_randomized";
  }
  return "unknown";
}

std::optional<OrderingMethod> parse_ordering(std::string_view name) {
  for (auto m : kAllOrderings)
    if (to_string(m) == name) return m;
  return std::nullopt;
}

std::vector<double> apply_ordering(const Spectrum& mu, OrderingMethod method,
                                   std::uint64_t seed) {
  std::vector<double> v = mu.values();  // ascending already
  switch (method) {
    case OrderingMethod::correlated:
      return v;
    case OrderingMethod::anti_correlated:
      std::reverse(v.begin(), v.end());
      return v;
    case OrderingMethod::uncorrelated: {
      Rng rng = make_rng(seed);
      shuffle(std::span<double>(v), rng);
      return v;
    }
    case OrderingMethod::correlated_randomized:
      return order_by_perturbed_key(v, false, seed);
    case OrderingMethod::anti_correlated_randomized:
      return order_by_perturbed_key(v, true, seed);
  }
  throw ArgumentError("unknown ordering method");
}

PairedFactorSpectra pair_factor_spectra(const Spectrum& degrees_g, const Spectrum& mu_g,
                                        const Spectrum& degrees_h, const Spectrum& mu_h,
                                        OrderingMethod method, std::uint64_t seed) {
  PairedFactorSpectra ps{degrees_g, degrees_h, apply_ordering(mu_g, method, split_seed(seed, 0)),
                         apply_ordering(mu_h, method, split_seed(seed, 1)), seed};
  check_paired(ps);
  return ps;
}

Spectrum estimate_direct_laplacian(const PairedFactorSpectra& ps) {
  return evaluate(ps, [](double mg, double dg, double mh, double dh) {
    return mg * dh + dg * mh - mg * mh;
  });
}

Spectrum estimate_strong_laplacian(const PairedFactorSpectra& ps) {
  return evaluate(ps, [](double mg, double dg, double mh, double dh) {
    return mg + mh + mg * dh + dg * mh - mg * mh;
  });
}

Spectrum estimate_from_spectra(ProductKind kind, const Spectrum& degrees_g,
                               const Spectrum& mu_g, const Spectrum& degrees_h,
                               const Spectrum& mu_h, OrderingMethod method,
                               std::uint64_t seed) {
  if (kind == ProductKind::cartesian)
    throw ArgumentError(
        "the Cartesian product Laplacian spectrum is exact; use "
        "compose_cartesian_laplacian instead of the estimator");
  auto ps = pair_factor_spectra(degrees_g, mu_g, degrees_h, mu_h, method, seed);
  return kind == ProductKind::direct ? estimate_direct_laplacian(ps)
                                     : estimate_strong_laplacian(ps);
}

Spectrum estimate_pipeline(ProductKind kind, const Graph& g, const Graph& h,
                           OrderingMethod method, std::uint64_t seed) {
  if (kind == ProductKind::cartesian)
    throw ArgumentError(
        "the Cartesian product Laplacian spectrum is exact; use "
        "compose_cartesian_laplacian instead of the estimator");
  return estimate_from_spectra(kind, degree_spectrum(g), laplacian_spectrum(laplacian_matrix(g)),
                               degree_spectrum(h), laplacian_spectrum(laplacian_matrix(h)),
                               method, seed);
}

}  // namespace gpspec
