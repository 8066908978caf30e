#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ccfrieze/diagram_io.hpp"
#include "ccfrieze/fixtures.hpp"

using namespace ccfrieze;

TEST_CASE("reading a diagram file normalizes the pairs") {
  auto d = read_diagram_json(
      R"({"N": 8, "diagonals": [[4,2], [5,2], [1,4], [5,1], [8,5]]})");
  CHECK(d.polygon().size() == 8);
  CHECK(d.diagonals() ==
        std::vector<Diagonal>{{1, 4}, {1, 5}, {2, 4}, {2, 5}, {5, 8}});
}

TEST_CASE("write then read is the identity") {
  for (const auto& d : {fixtures::octagon_quad_clique(),
                        fixtures::octagon_pentagon_clique(),
                        fixtures::pentagon_fan(), fixtures::empty_diagram(6)})
    CHECK(read_diagram_json(write_diagram_json(d)) == d);
}

TEST_CASE("syntax errors carry a line and column") {
  try {
    read_diagram_json("{\"N\": 8,\n  \"diagonals\": [[1,4] [2,5]]}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column > 1);
  }
}

TEST_CASE("schema problems are rejected") {
  CHECK_THROWS_AS(read_diagram_json("[1,2]"), ParseError);
  CHECK_THROWS_AS(read_diagram_json(R"({"diagonals": []})"), ParseError);
  CHECK_THROWS_AS(read_diagram_json(R"({"N": 8})"), ParseError);
  CHECK_THROWS_AS(read_diagram_json(R"({"N": 3, "diagonals": []})"), ParseError);
  CHECK_THROWS_AS(read_diagram_json(R"({"N": 8, "diagonals": [[1,2,3]]})"),
                  ParseError);
  CHECK_THROWS_AS(read_diagram_json(R"({"N": 8, "diagonals": [["a",2]]})"),
                  ParseError);
}

TEST_CASE("bad pairs are rejected") {
  // duplicates after normalization
  CHECK_THROWS_AS(read_diagram_json(R"({"N": 8, "diagonals": [[2,4],[4,2]]})"),
                  ParseError);
  // edges
  CHECK_THROWS_AS(read_diagram_json(R"({"N": 8, "diagonals": [[1,2]]})"),
                  ParseError);
  CHECK_THROWS_AS(read_diagram_json(R"({"N": 8, "diagonals": [[8,1]]})"),
                  ParseError);
  // degenerate and out-of-range labels
  CHECK_THROWS_AS(read_diagram_json(R"({"N": 8, "diagonals": [[3,3]]})"),
                  ParseError);
  CHECK_THROWS_AS(read_diagram_json(R"({"N": 8, "diagonals": [[0,4]]})"),
                  ParseError);
  CHECK_THROWS_AS(read_diagram_json(R"({"N": 8, "diagonals": [[2,9]]})"),
                  ParseError);
}
