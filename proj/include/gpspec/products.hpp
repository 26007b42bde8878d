#pragma once

#include <optional>
#include <string_view>

#include "gpspec/dense_matrix.hpp"
#include "gpspec/graph.hpp"

namespace gpspec {

enum class ProductKind { cartesian, direct, strong };

std::string_view to_string(ProductKind kind);
std::optional<ProductKind> parse_product_kind(std::string_view name);

// Block (i, j) of the result is a(i, j) * b.
DenseMatrix kron_product(const DenseMatrix& a, const DenseMatrix& b);

// a (x) I_b + I_a (x) b. Both operands must be square.
DenseMatrix kron_sum(const DenseMatrix& a, const DenseMatrix& b);

// Node (x, y) of the product is flattened to x * h.node_count() + y, which
// reproduces the Kronecker block layout of the adjacency matrices.
Graph product_graph(ProductKind kind, const Graph& g, const Graph& h);

}  // namespace gpspec
