#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gpspec/estimator.hpp"
#include "gpspec/graph.hpp"
#include "gpspec/products.hpp"
#include "gpspec/randgen.hpp"
#include "gpspec/spectrum.hpp"
#include "gpspec/statistics.hpp"

namespace gpspec {

using Seconds = std::chrono::duration<double>;

struct TrialConfig {
  ProductKind kind = ProductKind::direct;
  GraphModel model_g;
  GraphModel model_h;
  OrderingMethod method = OrderingMethod::correlated;
  std::uint64_t seed = 0;  // trial seed; factor graphs and orderings derive from it
};

struct TrialReport {
  TrialConfig config;
  Spectrum actual;
  Spectrum estimated;
  double rmse = 0.0;
  std::vector<std::optional<double>> pct_errors;  // nullopt = undefined rank
  Seconds wall_time_exact{0};
  Seconds wall_time_estimate{0};
};

// Root mean square of positional differences. Throws ArgumentError on size
// mismatch.
double rmse(const Spectrum& actual, const Spectrum& estimated);

// Per rank: 100 (est - act) / act when |act| > epsilon; 0 when both are
// within epsilon of zero; nullopt when only the actual value is.
std::vector<std::optional<double>> percentage_errors(const Spectrum& actual,
                                                     const Spectrum& estimated,
                                                     double epsilon = 1e-9);

// Laplacian spectrum of the explicitly built product graph.
Spectrum exact_product_laplacian(ProductKind kind, const Graph& g, const Graph& h);

// Factor graphs of trial `seed`: G from split_seed(seed, 0), H from split_seed(seed, 1).
std::pair<Graph, Graph> trial_factors(const GraphModel& model_g, const GraphModel& model_h,
                                      std::uint64_t seed);
std::uint64_t trial_ordering_seed(std::uint64_t trial_seed);

TrialReport run_trial(const TrialConfig& config);

struct CorrelationResult {
  std::vector<double> coefficients;                        // defined pairs, (i, j) row-major
  std::vector<std::pair<std::size_t, std::size_t>> excluded;  // undefined pairs
};

// Pearson correlation between x = w_g[i] (x) w_h[j] and L_{GxH} x for every
// pair of factor Laplacian eigenvectors.
CorrelationResult correlation_experiment(const Graph& g, const Graph& h);

struct MethodComparison {
  std::map<OrderingMethod, DistributionSummary> rmse;
  std::map<OrderingMethod, std::vector<TrialReport>> reports;
};

// Paired design: trial t uses the same factor pair (trial seed
// split_seed(base_seed, t)) under every ordering method. `jobs` > 1 runs
// trials on worker threads; results are merged by trial index.
MethodComparison run_method_comparison(ProductKind kind, const GraphModel& model_g,
                                       const GraphModel& model_h, std::size_t trials,
                                       std::uint64_t base_seed, std::size_t jobs = 1);

struct ErrorProfile {
  std::vector<DistributionSummary> per_rank;  // index k = rank k + 1
  std::vector<std::size_t> undefined_per_rank;
  std::size_t defined_count = 0;
  std::size_t within_10pct_count = 0;
  double fraction_within_10pct = 0.0;
  std::vector<TrialReport> reports;
};

ErrorProfile summarize_error_profile(std::vector<TrialReport> reports);

ErrorProfile run_error_profile(ProductKind kind, const GraphModel& model_g,
                               const GraphModel& model_h, std::size_t trials,
                               std::uint64_t base_seed, std::size_t jobs = 1,
                               OrderingMethod method = OrderingMethod::correlated);

struct ExhaustiveResult {
  double best_rmse = 0.0;
  std::vector<double> best_order_g;  // mu_g values in the optimal pairing order
  std::vector<double> best_order_h;
  std::size_t orderings_searched = 0;
};

inline constexpr double kMaxExhaustiveSearch = 1e7;

// Minimum RMSE over all orderings of both factor Laplacian spectra, degrees
// held ascending. Throws ArgumentError when |V_G|! |V_H|! exceeds 1e7.
ExhaustiveResult exhaustive_ordering_oracle(ProductKind kind, const Graph& g, const Graph& h);

struct TimingResult {
  Seconds t_exact{0};
  Seconds t_estimate{0};
  double speedup = 0.0;
  Spectrum actual;
  Spectrum estimated;
};

// Times the explicit product eigendecomposition against the correlated
// estimate on factors drawn with trial_factors(seed).
TimingResult timing_comparison(ProductKind kind, const GraphModel& model_g,
                               const GraphModel& model_h, std::uint64_t seed);

}  // namespace gpspec
