#include <doctest.h>

#include <numeric>

#include "gpspec/errors.hpp"
#include "gpspec/graph.hpp"
#include "gpspec/randgen.hpp"
#include "gpspec/rng.hpp"
#include "oracle.hpp"

using namespace gpspec;
using gpspec::testing::fig1_g;
using gpspec::testing::fig1_h;
using gpspec::testing::from_rows;

TEST_CASE("graph construction normalizes and validates edges") {
  Graph g(3, {{2, 0}, {1, 0}});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), ArgumentError);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), ArgumentError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), ArgumentError);
}

TEST_CASE("adjacency matrix of the example factors") {
  CHECK(adjacency_matrix(fig1_g()) == from_rows({{0, 1, 0, 0}, {1, 0, 1, 1}, {0, 1, 0, 0}, {0, 1, 0, 0}}));
  CHECK(adjacency_matrix(fig1_h()) == from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  CHECK(adjacency_matrix(Graph(1, {})) == DenseMatrix(1, 1));
}

TEST_CASE("degree spectrum") {
  CHECK(degree_spectrum(fig1_g()).values() == std::vector<double>{1, 1, 1, 3});
  CHECK(degree_spectrum(fig1_h()).values() == std::vector<double>{2, 2, 2});
  CHECK(degree_spectrum(Graph(3, {})).values() == std::vector<double>{0, 0, 0});
  CHECK(degree_spectrum(fig1_g()).kind() == SpectrumKind::degree);
}

TEST_CASE("laplacian matrix") {
  auto l3 = laplacian_matrix(complete_graph(3));
  CHECK(l3 == from_rows({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));
  auto lg = laplacian_matrix(fig1_g());
  CHECK(lg == DenseMatrix::diagonal(std::vector<double>{1, 3, 1, 1}) - adjacency_matrix(fig1_g()));
  CHECK(laplacian_matrix(Graph(4, {})) == DenseMatrix(4, 4));
}

TEST_CASE("connectivity") {
  CHECK(is_connected(complete_graph(3)));
  CHECK_FALSE(is_connected(Graph(2, {})));
  CHECK(is_connected(fig1_g()));
  CHECK(is_connected(Graph(1, {})));
  CHECK_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("matrix invariants hold on random graphs") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng = make_rng(seed);
    const std::size_t n = 1 + uniform_below(rng, 15);
    std::vector<Edge> e;
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = u + 1; v < n; ++v)
        if (uniform01(rng) < 0.3) e.emplace_back(u, v);
    Graph g(n, e);
    CAPTURE(seed);

    auto a = adjacency_matrix(g);
    CHECK(a.is_symmetric());
    CHECK(a.trace() == 0.0);
    double total = 0.0;
    for (double x : a.data()) total += x;
    CHECK(total == 2.0 * static_cast<double>(g.edge_count()));

    auto l = laplacian_matrix(g);
    auto zero = l * std::vector<double>(n, 1.0);
    for (double z : zero) CHECK(std::abs(z) <= 1e-12);

    auto deg = g.degrees();
    CHECK(std::accumulate(deg.begin(), deg.end(), std::size_t{0}) == 2 * g.edge_count());
  }
}

TEST_CASE("regularity and named graphs") {
  CHECK(is_regular(cycle_graph(5)));
  CHECK(is_regular(complete_graph(4)));
  CHECK_FALSE(is_regular(fig1_g()));
  CHECK(path_graph(4).edge_count() == 3);
  CHECK(star_graph(5).degrees() == std::vector<std::size_t>{4, 1, 1, 1, 1});
  CHECK_THROWS_AS(cycle_graph(2), ArgumentError);
}
