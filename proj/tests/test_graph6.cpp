#include "doctest.h"
#include "oracles.hpp"
#include "perfdiv/catalog.hpp"
#include "perfdiv/conjectures.hpp"
#include "perfdiv/graph6.hpp"

using namespace perfdiv;

TEST_CASE("known short-form encodings") {
  CHECK(write_graph6(Graph::from_edges(2, {{0, 1}})) == "A_");
  CHECK(write_graph6(named("complete(3)")) == "Bw");
  CHECK(write_graph6(Graph::from_edges(3, {})) == "B?");
  CHECK(write_graph6(named("c5")) == "Dhc");
  CHECK(write_graph6(Graph::from_edges(0, {})) == "?");

  CHECK(parse_graph6("A_") == Graph::from_edges(2, {{0, 1}}));
  CHECK(parse_graph6(">>graph6<<A_") == Graph::from_edges(2, {{0, 1}}));
  CHECK(parse_graph6("Dhc\n") == named("c5"));
}

TEST_CASE("round trips are bit-exact against a reference encoder") {
  for (int n = 0; n <= 5; ++n) {
    for (const Graph& g : enumerate_small(n)) {
      const std::string line = write_graph6(g);
      CHECK(line == oracles::g6_reference_encode(g));
      CHECK(parse_graph6(line) == g);
      CHECK(write_graph6(parse_graph6(line)) == line);
    }
  }
  for (const std::string& key : catalog_keys()) {
    const Graph g = named(key);
    CHECK(write_graph6(g) == oracles::g6_reference_encode(g));
    CHECK(parse_graph6(write_graph6(g)) == g);
  }
  // largest supported order
  const Graph big = random_graph(62, 0.5, 7);
  CHECK(parse_graph6(write_graph6(big)) == big);
  CHECK(write_graph6(big) == oracles::g6_reference_encode(big));
}

TEST_CASE("malformed lines are rejected") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("~??"), ParseError);     // long form
  CHECK_THROWS_AS(parse_graph6("D"), ParseError);       // truncated body
  CHECK_THROWS_AS(parse_graph6("Dhcc"), ParseError);    // trailing bytes
  CHECK_THROWS_AS(parse_graph6("B\x1f"), ParseError);   // low byte in body
  CHECK_THROWS_AS(parse_graph6("A\x7f"), ParseError);   // high byte in body
  CHECK_THROWS_AS(parse_graph6("\x20:"), ParseError);   // bad header
  // non-zero padding bits: K2 body with a stray low bit set
  CHECK_THROWS_AS(parse_graph6("A`"), ParseError);
}
