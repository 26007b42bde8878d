#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "gpspec/graph.hpp"
#include "gpspec/products.hpp"
#include "gpspec/spectrum.hpp"

namespace gpspec {

// How factor Laplacian eigenvalues are paired with the (ascending) degree
// sequences before the estimate is evaluated.
enum class OrderingMethod {
  uncorrelated,                // random permutation
  correlated,                  // ascending
  correlated_randomized,       // ascending by value * U[0.9, 1.1]
  anti_correlated,             // descending
  anti_correlated_randomized,  // descending by value * U[0.9, 1.1]
};

inline constexpr std::array<OrderingMethod, 5> kAllOrderings = {
    OrderingMethod::uncorrelated, OrderingMethod::correlated,
    OrderingMethod::correlated_randomized, OrderingMethod::anti_correlated,
    OrderingMethod::anti_correlated_randomized};

std::string_view to_string(OrderingMethod method);
std::optional<OrderingMethod> parse_ordering(std::string_view name);

// Returns a permutation of mu's values. Randomized methods perturb only the
// sort key; the emitted values are the original eigenvalues.
std::vector<double> apply_ordering(const Spectrum& mu, OrderingMethod method,
                                   std::uint64_t seed);

struct PairedFactorSpectra {
  Spectrum degrees_g;            // ascending
  Spectrum degrees_h;            // ascending
  std::vector<double> mu_g;      // ordered per method
  std::vector<double> mu_h;      // ordered per method
  std::uint64_t seed = 0;
};

// Orders both Laplacian spectra (mu_g with split_seed(seed, 0), mu_h with
// split_seed(seed, 1)) and pairs them with the degree spectra.
PairedFactorSpectra pair_factor_spectra(const Spectrum& degrees_g, const Spectrum& mu_g,
                                        const Spectrum& degrees_h, const Spectrum& mu_h,
                                        OrderingMethod method, std::uint64_t seed);

// { mu_g[i] d_h[j] + d_g[i] mu_h[j] - mu_g[i] mu_h[j] }
Spectrum estimate_direct_laplacian(const PairedFactorSpectra& ps);

// { mu_g[i] + mu_h[j] + mu_g[i] d_h[j] + d_g[i] mu_h[j] - mu_g[i] mu_h[j] }
Spectrum estimate_strong_laplacian(const PairedFactorSpectra& ps);

// Full estimate from factor graphs without building the product. `kind`
// must be direct or strong; the Cartesian spectrum is exact, see
// compose_cartesian_laplacian.
Spectrum estimate_pipeline(ProductKind kind, const Graph& g, const Graph& h,
                           OrderingMethod method, std::uint64_t seed);

// Same, starting from precomputed factor spectra.
Spectrum estimate_from_spectra(ProductKind kind, const Spectrum& degrees_g,
                               const Spectrum& mu_g, const Spectrum& degrees_h,
                               const Spectrum& mu_h, OrderingMethod method,
                               std::uint64_t seed);

}  // namespace gpspec
