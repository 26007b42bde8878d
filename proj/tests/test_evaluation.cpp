#include <doctest.h>

#include <cmath>

#include "gpspec/errors.hpp"
#include "gpspec/evaluation.hpp"
#include "gpspec/linalg.hpp"
#include "gpspec/rng.hpp"
#include "oracle.hpp"

using namespace gpspec;

namespace {

Spectrum lap(std::vector<double> v) { return Spectrum(std::move(v), SpectrumKind::laplacian); }

}  // namespace

TEST_CASE("rmse") {
  CHECK(rmse(lap({0, 1, 2}), lap({0, 1, 2})) == 0.0);
  CHECK(rmse(lap({0, 2}), lap({0, 4})) == doctest::Approx(std::sqrt(2.0)));
  CHECK(rmse(lap({1, 1, 1}), lap({2, 2, 2})) == doctest::Approx(1.0));
  CHECK_THROWS_AS(rmse(lap({1}), lap({1, 2})), ArgumentError);
}

TEST_CASE("percentage errors") {
  auto e = percentage_errors(lap({0, 2, 4}), lap({0, 1.8, 4.4}));
  REQUIRE(e.size() == 3);
  CHECK(*e[0] == 0.0);
  CHECK(*e[1] == doctest::Approx(-10.0));
  CHECK(*e[2] == doctest::Approx(10.0));

  for (auto x : percentage_errors(lap({0, 3, 5}), lap({0, 3, 5}))) CHECK(*x == 0.0);

  auto u = percentage_errors(lap({0, 1}), lap({0.5, 1}));
  CHECK_FALSE(u[0].has_value());
  CHECK(*u[1] == 0.0);
  CHECK_THROWS_AS(percentage_errors(lap({1}), lap({1, 2})), ArgumentError);
}

TEST_CASE("correlation experiment on regular factors") {
  const auto res = correlation_experiment(cycle_graph(4), complete_graph(3));
  // only the pair of constant eigenvectors is undefined
  REQUIRE(res.excluded.size() == 1);
  CHECK(res.excluded.front() == std::pair<std::size_t, std::size_t>{0, 0});
  CHECK(res.coefficients.size() == 11);
  for (double c : res.coefficients) CHECK(std::abs(c - 1.0) <= 1e-8);
}

TEST_CASE("correlation experiment on irregular factors stays mostly positive") {
  const auto [g, h] = trial_factors(ErModel{12, 20}, ErModel{8, 14}, 3);
  const auto res = correlation_experiment(g, h);
  CHECK(res.coefficients.size() + res.excluded.size() == 96);
  const auto s = summarize(res.coefficients);
  CHECK(s.median > 0.5);
  CHECK(s.max <= 1.0);
}

TEST_CASE("method comparison with regular factors gives zero error") {
  // er:4:6 is K4 and er:3:3 is K3
  const auto mc = run_method_comparison(ProductKind::direct, ErModel{4, 6}, ErModel{3, 3}, 1, 5);
  for (auto m : kAllOrderings) {
    CAPTURE(to_string(m));
    CHECK(mc.rmse.at(m).max <= 1e-8);
    CHECK(mc.reports.at(m).size() == 1);
  }
}

TEST_CASE("trials are reproducible and independent of thread count") {
  const GraphModel g = ErModel{10, 16}, h = BaModel{8, 2};
  const auto serial = run_method_comparison(ProductKind::strong, g, h, 6, 77, 1);
  const auto threaded = run_method_comparison(ProductKind::strong, g, h, 6, 77, 3);
  for (auto m : kAllOrderings) {
    const auto& a = serial.reports.at(m);
    const auto& b = threaded.reports.at(m);
    REQUIRE(a.size() == b.size());
    for (std::size_t t = 0; t < a.size(); ++t) {
      CHECK(a[t].actual == b[t].actual);
      CHECK(a[t].estimated == b[t].estimated);
      CHECK(a[t].config.seed == split_seed(77, t));
    }
  }
  // a recorded config replays bit-identically
  const auto& rec = serial.reports.at(OrderingMethod::uncorrelated)[4];
  const auto replay = run_trial(rec.config);
  CHECK(replay.actual == rec.actual);
  CHECK(replay.estimated == rec.estimated);
  CHECK(replay.rmse == rec.rmse);
}

TEST_CASE("error profile pools ranks across trials") {
  const auto ep = run_error_profile(ProductKind::direct, ErModel{10, 16}, ErModel{6, 8}, 4, 1);
  CHECK(ep.per_rank.size() == 60);
  CHECK(ep.reports.size() == 4);
  std::size_t undefined = 0;
  for (auto u : ep.undefined_per_rank) undefined += u;
  CHECK(ep.defined_count + undefined == 240);
  CHECK(ep.fraction_within_10pct >= 0.0);
  CHECK(ep.fraction_within_10pct <= 1.0);
  CHECK(ep.per_rank[0].median == 0.0);  // shared zero eigenvalue
  for (const auto& r : ep.reports) {
    CHECK(std::abs(r.actual.min()) <= 1e-9);
    CHECK(std::abs(r.estimated.min()) <= 1e-9);
  }
}

TEST_CASE("error profile reports undefined ranks") {
  TrialReport r;
  r.pct_errors = {0.0, std::nullopt, 5.0, -20.0};
  const auto ep = summarize_error_profile({r, r});
  CHECK(ep.undefined_per_rank == std::vector<std::size_t>{0, 2, 0, 0});
  CHECK(ep.defined_count == 6);
  CHECK(ep.within_10pct_count == 4);
  CHECK(ep.fraction_within_10pct == doctest::Approx(4.0 / 6.0));
  CHECK(ep.per_rank[1].count == 0);
}

TEST_CASE("trial generation failures carry the trial index") {
  // Feasible in principle, but a uniformly drawn 59-edge graph on 60 nodes is
  // practically never a spanning tree.
  try {
    run_error_profile(ProductKind::direct, ErModel{60, 59}, ErModel{3, 3}, 1, 0);
    FAIL("expected a generation error");
  } catch (const GenerationError& e) {
    CHECK(std::string(e.what()).find("trial 0") != std::string::npos);
  }
}

TEST_CASE("exhaustive ordering oracle") {
  SUBCASE("regular factors reach zero") {
    const auto r = exhaustive_ordering_oracle(ProductKind::direct, cycle_graph(4), complete_graph(3));
    CHECK(r.best_rmse <= 1e-8);
    CHECK(r.orderings_searched == 24 * 6);
  }
  SUBCASE("never worse than correlated ordering") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto [g, h] = trial_factors(ErModel{5, 6}, ErModel{4, 4}, seed);
      for (auto kind : {ProductKind::direct, ProductKind::strong}) {
        const auto r = exhaustive_ordering_oracle(kind, g, h);
        const double corr = rmse(exact_product_laplacian(kind, g, h),
                                 estimate_pipeline(kind, g, h, OrderingMethod::correlated, 0));
        CHECK(r.best_rmse <= corr + 1e-12);
        CHECK(r.best_order_g.size() == 5);
        CHECK(r.best_order_h.size() == 4);
      }
    }
  }
  SUBCASE("size bound") {
    CHECK_THROWS_AS(exhaustive_ordering_oracle(ProductKind::direct, cycle_graph(8), cycle_graph(6)),
                    ArgumentError);
    CHECK_THROWS_AS(exhaustive_ordering_oracle(ProductKind::cartesian, cycle_graph(3), cycle_graph(3)),
                    ArgumentError);
  }
}

TEST_CASE("timing comparison on tiny factors returns consistent spectra") {
  const auto a = timing_comparison(ProductKind::direct, ErModel{4, 4}, ErModel{3, 3}, 2);
  const auto b = timing_comparison(ProductKind::direct, ErModel{4, 4}, ErModel{3, 3}, 2);
  CHECK(a.actual == b.actual);
  CHECK(a.estimated == b.estimated);
  CHECK(a.actual.size() == 12);
  CHECK(a.speedup > 0.0);
}
