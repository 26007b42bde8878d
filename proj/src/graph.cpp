#include "gpspec/graph.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "gpspec/errors.hpp"

namespace gpspec {

Graph::Graph(std::size_t node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  for (auto& [u, v] : edges_) {
    if (u >= node_count_ || v >= node_count_)
      throw ArgumentError("edge (" + std::to_string(u) + ", " +
                          std::to_string(v) + ") out of range for " +
                          std::to_string(node_count_) + " nodes");
    if (u == v) throw ArgumentError("self-loop at node " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw ArgumentError("duplicate edge (" + std::to_string(dup->first) + ", " +
                        std::to_string(dup->second) + ")");
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> deg(node_count_, 0);
  for (auto [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

std::vector<std::vector<NodeId>> Graph::adjacency_lists() const {
  std::vector<std::vector<NodeId>> adj(node_count_);
  for (auto [u, v] : edges_) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

DenseMatrix adjacency_matrix(const Graph& g) {
  DenseMatrix a(g.node_count(), g.node_count());
  for (auto [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  return a;
}

DenseMatrix degree_matrix(const Graph& g) {
  DenseMatrix d(g.node_count(), g.node_count());
  auto deg = g.degrees();
  for (std::size_t i = 0; i < deg.size(); ++i) d(i, i) = static_cast<double>(deg[i]);
  return d;
}

DenseMatrix laplacian_matrix(const Graph& g) {
  DenseMatrix l(g.node_count(), g.node_count());
  for (auto [u, v] : g.edges()) {
    l(u, v) = -1.0;
    l(v, u) = -1.0;
    l(u, u) += 1.0;
    l(v, v) += 1.0;
  }
  return l;
}

Spectrum degree_spectrum(const Graph& g) {
  auto deg = g.degrees();
  return Spectrum(std::vector<double>(deg.begin(), deg.end()), SpectrumKind::degree);
}

bool is_connected(const Graph& g) {
  if (g.node_count() == 0) return true;
  auto adj = g.adjacency_lists();
  std::vector<bool> seen(g.node_count(), false);
  std::vector<NodeId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    for (NodeId v : adj[u]) {
      if (seen[v]) continue;
      seen[v] = true;
      ++reached;
      stack.push_back(v);
    }
  }
  return reached == g.node_count();
}

bool is_regular(const Graph& g) {
  auto deg = g.degrees();
  return std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<>()) == deg.end();
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw ArgumentError("cycle needs at least 3 nodes");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    e.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % n));
  return Graph(n, std::move(e));
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      e.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
  return Graph(n, std::move(e));
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i)
    e.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(i + 1));
  return Graph(n, std::move(e));
}

Graph star_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i < n; ++i) e.emplace_back(0, static_cast<NodeId>(i));
  return Graph(n, std::move(e));
}

Graph relabel(const Graph& g, std::span<const NodeId> perm) {
  if (perm.size() != g.node_count())
    throw ArgumentError("relabel: permutation size mismatch");
  std::vector<Edge> e;
  e.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return Graph(g.node_count(), std::move(e));
}

}  // namespace gpspec
