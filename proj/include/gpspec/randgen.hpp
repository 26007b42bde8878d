#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "gpspec/graph.hpp"

namespace gpspec {

// G(n, M): `edges` distinct pairs chosen uniformly, resampled until connected.
struct ErModel {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  bool operator==(const ErModel&) const = default;
};

// Preferential attachment from a clique on edges_per_node + 1 nodes.
struct BaModel {
  std::size_t nodes = 0;
  std::size_t edges_per_node = 0;
  bool operator==(const BaModel&) const = default;
};

using GraphModel = std::variant<ErModel, BaModel>;

inline constexpr int kMaxErResamples = 10'000;

// Throws InfeasibleConfiguration if the model cannot be satisfied.
void validate(const GraphModel& model);

// "er:N:M" or "ba:N:m". Throws ArgumentError on malformed or infeasible specs.
GraphModel parse_model(std::string_view spec);
std::string to_string(const GraphModel& model);

// Deterministic in (model, seed). Throws GenerationError if an ER model
// yields no connected sample within kMaxErResamples draws.
Graph generate(const GraphModel& model, std::uint64_t seed);

}  // namespace gpspec
