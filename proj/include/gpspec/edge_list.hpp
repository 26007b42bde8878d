#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "gpspec/graph.hpp"

namespace gpspec {

// Text format:
//   # comment lines anywhere
//   nodes N
//   u v
//   ...
// Node ids are 0-based. Duplicate, self-loop and out-of-range edges are
// rejected with a ParseError naming the offending line.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
Graph load_edge_list(const std::filesystem::path& path);

// `header` lines are written as `# ...` comments before the body.
void write_edge_list(std::ostream& out, const Graph& g, std::string_view header = {});
void save_edge_list(const std::filesystem::path& path, const Graph& g,
                    std::string_view header = {});

}  // namespace gpspec
