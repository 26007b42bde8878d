#pragma once

// Test-only reference computations, independent of the library's LAPACK
// path and of its closed-form compositions.

#include <algorithm>
#include <cmath>
#include <vector>

#include "gpspec/dense_matrix.hpp"
#include "gpspec/graph.hpp"

namespace gpspec::testing {

// Cyclic Jacobi rotations on a copy of a symmetric matrix; returns
// ascending eigenvalues.
inline std::vector<double> jacobi_eigenvalues(const DenseMatrix& input, int max_sweeps = 100) {
  const std::size_t n = input.rows();
  std::vector<double> a(input.data().begin(), input.data().end());
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(at(p, q)) < 1e-300) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * at(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = at(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

// Adjacency built straight from the product definitions on node pairs.
inline DenseMatrix product_adjacency_by_definition(int kind, const Graph& g, const Graph& h) {
  // kind: 0 cartesian, 1 direct, 2 strong
  const auto ag = adjacency_matrix(g), ah = adjacency_matrix(h);
  const std::size_t m = g.node_count(), n = h.node_count();
  DenseMatrix out(m * n, m * n);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < m; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          const bool cart = (a == c && ah(b, d) == 1.0) || (ag(a, c) == 1.0 && b == d);
          const bool dir = ag(a, c) == 1.0 && ah(b, d) == 1.0;
          const bool on = kind == 0 ? cart : kind == 1 ? dir : (cart || dir);
          out(a * n + b, c * n + d) = on ? 1.0 : 0.0;
        }
  return out;
}

// The Fig. 1 example factors: a star centred on node 1, and a triangle.
inline Graph fig1_g() { return Graph(4, {{0, 1}, {1, 2}, {1, 3}}); }
inline Graph fig1_h() { return complete_graph(3); }

inline DenseMatrix from_rows(const std::vector<std::vector<double>>& rows) {
  DenseMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}


}  // namespace gpspec::testing
