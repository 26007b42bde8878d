#include "gpspec/edge_list.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "gpspec/errors.hpp"

namespace gpspec {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_index(std::string_view tok, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("expected a non-negative integer, got '" + std::string(tok) + "'",
                     line_no);
  return value;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t nodes = 0;
  std::set<Edge> seen;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto toks = split_ws(line);
    if (toks.empty() || toks.front().front() == '#') continue;

    if (!have_header) {
      if (toks.size() != 2 || toks[0] != "nodes")
        throw ParseError("expected 'nodes N' header", line_no);
      nodes = parse_index(toks[1], line_no);
      if (nodes == 0) throw ParseError("node count must be positive", line_no);
      have_header = true;
      continue;
    }
    if (toks.size() != 2) throw ParseError("expected 'u v'", line_no);
    std::size_t u = parse_index(toks[0], line_no);
    std::size_t v = parse_index(toks[1], line_no);
    if (u >= nodes || v >= nodes)
      throw ParseError("edge endpoint out of range [0, " + std::to_string(nodes) + ")",
                       line_no);
    if (u == v) throw ParseError("self-loop", line_no);
    Edge e{static_cast<NodeId>(std::min(u, v)), static_cast<NodeId>(std::max(u, v))};
    if (!seen.insert(e).second) throw ParseError("duplicate edge", line_no);
    edges.push_back(e);
  }
  if (!have_header) throw ParseError("missing 'nodes N' header", line_no);
  return Graph(nodes, std::move(edges));
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

Graph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, std::string_view header) {
  if (!header.empty()) {
    std::istringstream lines{std::string(header)};
    std::string l;
    while (std::getline(lines, l)) out << "# " << l << '\n';
  }
  out << "nodes " << g.node_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void save_edge_list(const std::filesystem::path& path, const Graph& g,
                    std::string_view header) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_edge_list(out, g, header);
}

}  // namespace gpspec
