#include "gpspec/randgen.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>
#include <vector>

#include "gpspec/errors.hpp"
#include "gpspec/rng.hpp"

namespace gpspec {
namespace {

std::uint64_t pair_key(std::size_t u, std::size_t v) {
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v);
}

// One G(n, M) draw. Sparse draws reject duplicate pairs; dense ones take a
// partial shuffle of the full pair list.
std::vector<Edge> sample_er_edges(const ErModel& m, Rng& rng) {
  const std::size_t n = m.nodes;
  const std::size_t total = n * (n - 1) / 2;
  std::vector<Edge> edges;
  edges.reserve(m.edges);
  if (2 * m.edges <= total) {
    std::unordered_set<std::uint64_t> used;
    while (edges.size() < m.edges) {
      auto u = static_cast<std::size_t>(uniform_below(rng, n));
      auto v = static_cast<std::size_t>(uniform_below(rng, n));
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      if (!used.insert(pair_key(u, v)).second) continue;
      edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }
  } else {
    std::vector<Edge> all;
    all.reserve(total);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        all.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    for (std::size_t k = 0; k < m.edges; ++k) {
      const auto j = k + static_cast<std::size_t>(uniform_below(rng, total - k));
      std::swap(all[k], all[j]);
    }
    all.resize(m.edges);
    edges = std::move(all);
  }
  return edges;
}

Graph generate_er(const ErModel& m, Rng& rng) {
  for (int attempt = 0; attempt < kMaxErResamples; ++attempt) {
    Graph g(m.nodes, sample_er_edges(m, rng));
    if (is_connected(g)) return g;
  }
  throw GenerationError("ER model " + to_string(GraphModel{m}) +
                        " produced no connected graph in " +
                        std::to_string(kMaxErResamples) + " draws");
}

Graph generate_ba(const BaModel& m, Rng& rng) {
  const std::size_t k = m.edges_per_node;
  std::vector<Edge> edges;
  // Each node appears in `targets` once per incident edge, so a uniform pick
  // from it is a degree-proportional pick.
  std::vector<NodeId> targets;
  for (std::size_t u = 0; u <= k; ++u)
    for (std::size_t v = u + 1; v <= k; ++v) {
      edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
      targets.push_back(static_cast<NodeId>(u));
      targets.push_back(static_cast<NodeId>(v));
    }
  std::vector<NodeId> chosen;
  for (std::size_t newcomer = k + 1; newcomer < m.nodes; ++newcomer) {
    chosen.clear();
    while (chosen.size() < k) {
      const NodeId t = targets[uniform_below(rng, targets.size())];
      if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) chosen.push_back(t);
    }
    for (NodeId t : chosen) {
      edges.emplace_back(t, static_cast<NodeId>(newcomer));
      targets.push_back(t);
      targets.push_back(static_cast<NodeId>(newcomer));
    }
  }
  return Graph(m.nodes, std::move(edges));
}

std::size_t parse_field(std::string_view tok, std::string_view spec) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
    throw ArgumentError("bad graph model '" + std::string(spec) +
                        "': expected er:N:M or ba:N:m");
  return v;
}

}  // namespace

void validate(const GraphModel& model) {
  if (const auto* er = std::get_if<ErModel>(&model)) {
    if (er->nodes == 0) throw InfeasibleConfiguration("ER model needs at least one node");
    const std::size_t max_edges = er->nodes * (er->nodes - 1) / 2;
    if (er->edges > max_edges)
      throw InfeasibleConfiguration("ER model " + to_string(model) + " asks for more than " +
                          std::to_string(max_edges) + " edges");
    if (er->edges + 1 < er->nodes)
      throw InfeasibleConfiguration("ER model " + to_string(model) +
                          " has too few edges to be connected");
    if (er->nodes >= (std::size_t{1} << 31))
      throw InfeasibleConfiguration("ER model too large");
  } else {
    const auto& ba = std::get<BaModel>(model);
    if (ba.edges_per_node < 1 || ba.edges_per_node >= ba.nodes)
      throw InfeasibleConfiguration("BA model " + to_string(model) + " needs 1 <= m < N");
  }
}

GraphModel parse_model(std::string_view spec) {
  auto c1 = spec.find(':');
  auto c2 = c1 == std::string_view::npos ? c1 : spec.find(':', c1 + 1);
  if (c2 == std::string_view::npos || spec.find(':', c2 + 1) != std::string_view::npos)
    throw ArgumentError("bad graph model '" + std::string(spec) +
                        "': expected er:N:M or ba:N:m");
  auto name = spec.substr(0, c1);
  auto a = parse_field(spec.substr(c1 + 1, c2 - c1 - 1), spec);
  auto b = parse_field(spec.substr(c2 + 1), spec);
  GraphModel model;
  if (name == "er")
    model = ErModel{a, b};
  else if (name == "ba")
    model = BaModel{a, b};
  else
    throw ArgumentError("unknown graph model '" + std::string(name) + "'");
  validate(model);
  return model;
}

std::string to_string(const GraphModel& model) {
  if (const auto* er = std::get_if<ErModel>(&model))
    return "er:" + std::to_string(er->nodes) + ":" + std::to_string(er->edges);
  const auto& ba = std::get<BaModel>(model);
  return "ba:" + std::to_string(ba.nodes) + ":" + std::to_string(ba.edges_per_node);
}

Graph generate(const GraphModel& model, std::uint64_t seed) {
  validate(model);
  Rng rng = make_rng(seed);
  if (const auto* er = std::get_if<ErModel>(&model)) return generate_er(*er, rng);
  return generate_ba(std::get<BaModel>(model), rng);
}

}  // namespace gpspec
