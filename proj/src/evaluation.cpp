#include "gpspec/evaluation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <numeric>
#include <string>
#include <thread>

#include "gpspec/errors.hpp"
#include "gpspec/linalg.hpp"
#include "gpspec/rng.hpp"

namespace gpspec {
namespace {

using Clock = std::chrono::steady_clock;

// Calls fn(i) for i in [0, count) on up to `jobs` threads. The exception of
// the lowest failing index is rethrown after all workers finish.
template <class Fn>
void parallel_for(std::size_t count, std::size_t jobs, Fn fn) {
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(count, 1));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// Factor data shared by every ordering method of one trial.
struct TrialFactors {
  Spectrum degrees_g, mu_g, degrees_h, mu_h;
  Spectrum actual;
  Seconds t_exact{0};
  Seconds t_factor_spectra{0};
};

TrialFactors prepare_trial(ProductKind kind, const GraphModel& model_g,
                           const GraphModel& model_h, std::uint64_t trial_seed,
                           std::size_t trial_index) {
  std::pair<Graph, Graph> factors;
  try {
    factors = trial_factors(model_g, model_h, trial_seed);
  } catch (const GenerationError& e) {
    throw GenerationError("trial " + std::to_string(trial_index) + ": " + e.what());
  }
  const auto& [g, h] = factors;
  TrialFactors tf;

  auto t0 = Clock::now();
  tf.actual = exact_product_laplacian(kind, g, h);
  auto t1 = Clock::now();
  tf.degrees_g = degree_spectrum(g);
  tf.degrees_h = degree_spectrum(h);
  tf.mu_g = laplacian_spectrum(laplacian_matrix(g));
  tf.mu_h = laplacian_spectrum(laplacian_matrix(h));
  auto t2 = Clock::now();
  tf.t_exact = t1 - t0;
  tf.t_factor_spectra = t2 - t1;
  return tf;
}

TrialReport finish_trial(const TrialFactors& tf, const TrialConfig& config) {
  TrialReport r;
  r.config = config;
  auto t0 = Clock::now();
  r.estimated = estimate_from_spectra(config.kind, tf.degrees_g, tf.mu_g, tf.degrees_h,
                                      tf.mu_h, config.method,
                                      trial_ordering_seed(config.seed));
  auto t1 = Clock::now();
  r.actual = tf.actual;
  r.rmse = rmse(r.actual, r.estimated);
  r.pct_errors = percentage_errors(r.actual, r.estimated);
  r.wall_time_exact = tf.t_exact;
  r.wall_time_estimate = tf.t_factor_spectra + (t1 - t0);
  return r;
}

std::vector<double> rmse_values(const std::vector<TrialReport>& reports) {
  std::vector<double> out;
  out.reserve(reports.size());
  for (const auto& r : reports) out.push_back(r.rmse);
  return out;
}

double factorial(std::size_t n) {
  double f = 1.0;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<double>(k);
  return f;
}

}  // namespace

double rmse(const Spectrum& actual, const Spectrum& estimated) {
  if (actual.size() != estimated.size())
    throw ArgumentError("rmse: spectra differ in size (" + std::to_string(actual.size()) +
                        " vs " + std::to_string(estimated.size()) + ")");
  if (actual.size() == 0) return 0.0;
  double s = 0.0;
  for (std::size_t k = 0; k < actual.size(); ++k) {
    const double d = estimated[k] - actual[k];
    s += d * d;
  }
  return std::sqrt(s / static_cast<double>(actual.size()));
}

std::vector<std::optional<double>> percentage_errors(const Spectrum& actual,
                                                     const Spectrum& estimated,
                                                     double epsilon) {
  if (actual.size() != estimated.size())
    throw ArgumentError("percentage_errors: spectra differ in size");
  std::vector<std::optional<double>> out(actual.size());
  for (std::size_t k = 0; k < actual.size(); ++k) {
    const double a = actual[k], e = estimated[k];
    if (std::abs(a) > epsilon)
      out[k] = 100.0 * (e - a) / a;
    else if (std::abs(e) <= epsilon)
      out[k] = 0.0;
  }
  return out;
}

Spectrum exact_product_laplacian(ProductKind kind, const Graph& g, const Graph& h) {
  return laplacian_spectrum(laplacian_matrix(product_graph(kind, g, h)));
}

std::pair<Graph, Graph> trial_factors(const GraphModel& model_g, const GraphModel& model_h,
                                      std::uint64_t seed) {
  return {generate(model_g, split_seed(seed, 0)), generate(model_h, split_seed(seed, 1))};
}

std::uint64_t trial_ordering_seed(std::uint64_t trial_seed) { return split_seed(trial_seed, 2); }

TrialReport run_trial(const TrialConfig& config) {
  auto tf = prepare_trial(config.kind, config.model_g, config.model_h, config.seed, 0);
  return finish_trial(tf, config);
}

CorrelationResult correlation_experiment(const Graph& g, const Graph& h) {
  const auto eg = eig_symmetric(laplacian_matrix(g));
  const auto eh = eig_symmetric(laplacian_matrix(h));
  const Graph product = product_graph(ProductKind::direct, g, h);
  const DenseMatrix lap = laplacian_matrix(product);

  // The explicit Laplacian, stored by nonzeros for the m*n matrix-vector products.
  const std::size_t n = lap.rows();
  std::vector<std::vector<std::pair<std::size_t, double>>> rows(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (lap(r, c) != 0.0) rows[r].emplace_back(c, lap(r, c));

  CorrelationResult out;
  std::vector<double> x(n), y(n);
  const std::size_t nh = h.node_count();
  for (std::size_t i = 0; i < g.node_count(); ++i)
    for (std::size_t j = 0; j < nh; ++j) {
      for (std::size_t a = 0; a < g.node_count(); ++a)
        for (std::size_t b = 0; b < nh; ++b) x[a * nh + b] = eg.vectors[i][a] * eh.vectors[j][b];
      for (std::size_t r = 0; r < n; ++r) {
        double s = 0.0;
        for (auto [c, v] : rows[r]) s += v * x[c];
        y[r] = s;
      }
      try {
        out.coefficients.push_back(pearson_correlation(x, y));
      } catch (const UndefinedCorrelation&) {
        out.excluded.emplace_back(i, j);
      }
    }
  return out;
}

MethodComparison run_method_comparison(ProductKind kind, const GraphModel& model_g,
                                       const GraphModel& model_h, std::size_t trials,
                                       std::uint64_t base_seed, std::size_t jobs) {
  if (trials < 1) throw ArgumentError("method comparison needs at least one trial");
  std::vector<std::vector<TrialReport>> per_trial(trials);
  parallel_for(trials, jobs, [&](std::size_t t) {
    const std::uint64_t seed = split_seed(base_seed, t);
    auto tf = prepare_trial(kind, model_g, model_h, seed, t);
    for (auto method : kAllOrderings)
      per_trial[t].push_back(finish_trial(tf, TrialConfig{kind, model_g, model_h, method, seed}));
  });

  MethodComparison mc;
  for (std::size_t m = 0; m < kAllOrderings.size(); ++m) {
    auto& reports = mc.reports[kAllOrderings[m]];
    for (auto& trial : per_trial) reports.push_back(std::move(trial[m]));
    mc.rmse[kAllOrderings[m]] = summarize(rmse_values(reports));
  }
  return mc;
}

ErrorProfile summarize_error_profile(std::vector<TrialReport> reports) {
  if (reports.empty()) throw ArgumentError("error profile needs at least one trial");
  const std::size_t ranks = reports.front().pct_errors.size();
  ErrorProfile ep;
  ep.undefined_per_rank.assign(ranks, 0);
  std::vector<std::vector<double>> by_rank(ranks);
  for (const auto& r : reports) {
    if (r.pct_errors.size() != ranks)
      throw ArgumentError("error profile: trials have different spectrum sizes");
    for (std::size_t k = 0; k < ranks; ++k) {
      if (!r.pct_errors[k]) {
        ++ep.undefined_per_rank[k];
        continue;
      }
      by_rank[k].push_back(*r.pct_errors[k]);
      ++ep.defined_count;
      if (std::abs(*r.pct_errors[k]) <= 10.0) ++ep.within_10pct_count;
    }
  }
  for (auto& v : by_rank) {
    // a rank undefined in every trial is reported with count 0
    ep.per_rank.push_back(v.empty() ? DistributionSummary{} : summarize(v));
  }
  ep.fraction_within_10pct =
      ep.defined_count == 0 ? 0.0
                            : static_cast<double>(ep.within_10pct_count) /
                                  static_cast<double>(ep.defined_count);
  ep.reports = std::move(reports);
  return ep;
}

ErrorProfile run_error_profile(ProductKind kind, const GraphModel& model_g,
                               const GraphModel& model_h, std::size_t trials,
                               std::uint64_t base_seed, std::size_t jobs,
                               OrderingMethod method) {
  if (trials < 1) throw ArgumentError("error profile needs at least one trial");
  std::vector<TrialReport> reports(trials);
  parallel_for(trials, jobs, [&](std::size_t t) {
    const std::uint64_t seed = split_seed(base_seed, t);
    auto tf = prepare_trial(kind, model_g, model_h, seed, t);
    reports[t] = finish_trial(tf, TrialConfig{kind, model_g, model_h, method, seed});
  });
  return summarize_error_profile(std::move(reports));
}

ExhaustiveResult exhaustive_ordering_oracle(ProductKind kind, const Graph& g, const Graph& h) {
  if (kind == ProductKind::cartesian)
    throw ArgumentError("exhaustive ordering search applies to direct and strong products");
  const std::size_t m = g.node_count(), n = h.node_count();
  if (factorial(m) * factorial(n) > kMaxExhaustiveSearch)
    throw ArgumentError("exhaustive search over " + std::to_string(m) + "! * " +
                        std::to_string(n) + "! orderings exceeds the 1e7 limit");

  const Spectrum actual = exact_product_laplacian(kind, g, h);
  const auto dg = degree_spectrum(g).values();
  const auto dh = degree_spectrum(h).values();
  const auto mu_g = laplacian_spectrum(laplacian_matrix(g)).values();
  const auto mu_h = laplacian_spectrum(laplacian_matrix(h)).values();

  ExhaustiveResult best;
  best.best_rmse = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> pg(m), ph(n);
  std::iota(pg.begin(), pg.end(), 0);
  std::vector<double> est(m * n);
  const bool strong = kind == ProductKind::strong;
  do {
    std::iota(ph.begin(), ph.end(), 0);
    do {
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const double a = mu_g[pg[i]], b = mu_h[ph[j]];
          double v = a * dh[j] + dg[i] * b - a * b;
          if (strong) v += a + b;
          est[i * n + j] = v;
        }
      const double e = rmse(actual, Spectrum(est, SpectrumKind::laplacian));
      ++best.orderings_searched;
      if (e < best.best_rmse) {
        best.best_rmse = e;
        best.best_order_g.clear();
        best.best_order_h.clear();
        for (auto k : pg) best.best_order_g.push_back(mu_g[k]);
        for (auto k : ph) best.best_order_h.push_back(mu_h[k]);
      }
    } while (std::next_permutation(ph.begin(), ph.end()));
  } while (std::next_permutation(pg.begin(), pg.end()));
  return best;
}

TimingResult timing_comparison(ProductKind kind, const GraphModel& model_g,
                               const GraphModel& model_h, std::uint64_t seed) {
  const auto [g, h] = trial_factors(model_g, model_h, seed);
  TimingResult tr;
  auto t0 = Clock::now();
  tr.actual = exact_product_laplacian(kind, g, h);
  auto t1 = Clock::now();
  tr.estimated = estimate_pipeline(kind, g, h, OrderingMethod::correlated, trial_ordering_seed(seed));
  auto t2 = Clock::now();
  tr.t_exact = t1 - t0;
  tr.t_estimate = t2 - t1;
  tr.speedup = tr.t_exact.count() / std::max(tr.t_estimate.count(), 1e-12);
  return tr;
}

}  // namespace gpspec
