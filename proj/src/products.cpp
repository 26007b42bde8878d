#include "gpspec/products.hpp"

#include "gpspec/errors.hpp"

namespace gpspec {

std::string_view to_string(ProductKind kind) {
  switch (kind) {
    case ProductKind::cartesian: return "cartesian";
    case ProductKind::direct: return "direct";
    case ProductKind::strong: return "strong";
  }
  return "unknown";
}

std::optional<ProductKind> parse_product_kind(std::string_view name) {
  if (name == "cartesian") return ProductKind::cartesian;
  if (name == "direct") return ProductKind::direct;
  if (name == "strong") return ProductKind::strong;
  return std::nullopt;
}

DenseMatrix kron_product(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t br = b.rows(), bc = b.cols();
  DenseMatrix out(a.rows() * br, a.cols() * bc);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double s = a(i, j);
      if (s == 0.0) continue;
      for (std::size_t k = 0; k < br; ++k)
        for (std::size_t l = 0; l < bc; ++l) out(i * br + k, j * bc + l) = s * b(k, l);
    }
  return out;
}

DenseMatrix kron_sum(const DenseMatrix& a, const DenseMatrix& b) {
  if (!a.is_square() || !b.is_square())
    throw ArgumentError("Kronecker sum needs square operands");
  return kron_product(a, DenseMatrix::identity(b.rows())) +
         kron_product(DenseMatrix::identity(a.rows()), b);
}

Graph product_graph(ProductKind kind, const Graph& g, const Graph& h) {
  const std::size_t m = g.node_count();
  const std::size_t n = h.node_count();
  auto id = [n](std::size_t x, std::size_t y) { return static_cast<NodeId>(x * n + y); };

  std::vector<Edge> edges;
  const bool cart = kind == ProductKind::cartesian || kind == ProductKind::strong;
  const bool dir = kind == ProductKind::direct || kind == ProductKind::strong;
  if (cart) {
    // g-edges with h fixed, then h-edges with g fixed
    for (auto [u, v] : g.edges())
      for (std::size_t y = 0; y < n; ++y) edges.emplace_back(id(u, y), id(v, y));
    for (std::size_t x = 0; x < m; ++x)
      for (auto [u, v] : h.edges()) edges.emplace_back(id(x, u), id(x, v));
  }
  if (dir) {
    // each pair of factor edges yields two product edges
    for (auto [a, b] : g.edges())
      for (auto [c, d] : h.edges()) {
        edges.emplace_back(id(a, c), id(b, d));
        edges.emplace_back(id(a, d), id(b, c));
      }
  }
  return Graph(m * n, std::move(edges));
}

}  // namespace gpspec
