#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gpspec/dense_matrix.hpp"
#include "gpspec/spectrum.hpp"

namespace gpspec {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

// Simple undirected graph on nodes 0..node_count-1. Edges are normalized to
// (min, max) and kept sorted; construction rejects self-loops, duplicates
// and out-of-range endpoints.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t node_count, std::vector<Edge> edges);

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::vector<std::size_t> degrees() const;
  std::vector<std::vector<NodeId>> adjacency_lists() const;

  bool operator==(const Graph&) const = default;

 private:
  std::size_t node_count_ = 0;
  std::vector<Edge> edges_;
};

DenseMatrix adjacency_matrix(const Graph& g);
DenseMatrix degree_matrix(const Graph& g);
DenseMatrix laplacian_matrix(const Graph& g);
Spectrum degree_spectrum(const Graph& g);
bool is_connected(const Graph& g);

bool is_regular(const Graph& g);

// Named graphs used throughout tests and examples.
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph star_graph(std::size_t n);

// Relabels nodes: node v becomes perm[v].
Graph relabel(const Graph& g, std::span<const NodeId> perm);

}  // namespace gpspec
