#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "gpspec/edge_list.hpp"
#include "gpspec/errors.hpp"
#include "oracle.hpp"

using namespace gpspec;

namespace {

std::size_t error_line(std::string_view text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("parse edge list with comments") {
  auto g = parse_edge_list("# star\nnodes 4\n0 1\n# middle\n1 2\n  1   3  \n\n");
  CHECK(g == testing::fig1_g());
}

TEST_CASE("parse errors name the line") {
  CHECK(error_line("nodes 3\n0 1\na b c\n") == 3);
  CHECK(error_line("nodes 3\n0 1\n1 0\n") == 3);     // duplicate
  CHECK(error_line("nodes 3\n0 3\n") == 2);          // out of range
  CHECK(error_line("nodes 3\n2 2\n") == 2);          // self-loop
  CHECK(error_line("0 1\n") == 1);                   // missing header
  CHECK(error_line("nodes 0\n") == 1);
  CHECK(error_line("nodes 2\n0 -1\n") == 2);
  CHECK_THROWS_AS(parse_edge_list("# nothing\n"), ParseError);
}

TEST_CASE("write then load reproduces the graph") {
  const Graph g = cycle_graph(7);
  auto path = std::filesystem::temp_directory_path() / "gpspec_edge_list_roundtrip.txt";
  save_edge_list(path, g, "made by a test\nsecond line");
  CHECK(load_edge_list(path) == g);
  std::filesystem::remove(path);

  std::ostringstream os;
  write_edge_list(os, Graph(1, {}));
  CHECK(os.str() == "nodes 1\n");
}
