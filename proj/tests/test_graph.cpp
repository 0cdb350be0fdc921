#include "doctest.h"
#include "oracles.hpp"
#include "perfdiv/catalog.hpp"
#include "perfdiv/conjectures.hpp"
#include "perfdiv/graph.hpp"

using namespace perfdiv;

TEST_CASE("vertex sets behave like bitmask subsets") {
  VertexSet s{0, 4, 5};
  CHECK(s.count() == 3);
  CHECK(s.contains(4));
  CHECK(!s.contains(1));
  CHECK(s.least() == 0);
  CHECK(s.elements() == std::vector<int>{0, 4, 5});
  CHECK(s.to_string() == "{0,4,5}");
  CHECK((s - VertexSet{4}) == VertexSet{0, 5});
  CHECK(s.subset_of(VertexSet::full(6)));
  CHECK(VertexSet{}.least() == -1);

  // list order, not mask order: {0,3} precedes {1,2}
  CHECK(lex_less(VertexSet{0, 3}, VertexSet{1, 2}));
  CHECK(!lex_less(VertexSet{1, 2}, VertexSet{0, 3}));
  CHECK(lex_less(VertexSet{0}, VertexSet{0, 1}));
}

TEST_CASE("from_edges validates its input") {
  const Graph k2 = Graph::from_edges(2, {{0, 1}});
  CHECK(k2.size() == 2);
  CHECK(k2.edge_count() == 1);
  CHECK(k2.adjacent(0, 1));

  CHECK(Graph::from_edges(3, {}).edge_count() == 0);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(2, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(63, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(-1, {}), std::invalid_argument);
}

TEST_CASE("figure1 edge list matches the named construction") {
  const Graph g = Graph::from_edges(
      10, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 5}, {5, 0}, {5, 3}, {4, 6},
           {4, 9}, {5, 9}, {6, 7}, {7, 8}, {8, 9}});
  CHECK(g.edge_count() == 13);
  CHECK(g == named("figure1"));
}

TEST_CASE("induced subgraphs preserve adjacency through the map") {
  const Graph fig = named("figure1");

  SUBCASE("{A,B,C,D,F} induces a five-cycle") {
    const auto sub = induced(fig, VertexSet{0, 1, 2, 3, 5});
    CHECK(sub.graph.size() == 5);
    CHECK(sub.graph.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(sub.graph.degree(v) == 2);
    CHECK(sub.vertex_map == std::vector<int>{0, 1, 2, 3, 5});
  }

  SUBCASE("identity and empty cases") {
    CHECK(induced(fig, fig.vertices()).graph == fig);
    CHECK(induced(fig, VertexSet{}).graph.size() == 0);
    CHECK_THROWS_AS(induced(fig, VertexSet{10}), std::invalid_argument);
  }

  SUBCASE("composition of induced maps") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const Graph g = random_graph(9, 0.4, 500 + seed);
      const VertexSet s1((seed * 2654435761u) & 0x1ffu);
      const auto first = induced(g, s1);
      const VertexSet s2((seed * 40503u) &
                         VertexSet::full(first.graph.size()).bits);
      const auto second = induced(first.graph, s2);
      const auto direct = induced(g, first.map_back(s2));
      CHECK(second.graph == direct.graph);
      CHECK(first.map_back(second.vertex_map) == direct.vertex_map);
    }
  }
}

TEST_CASE("complement is an involution and maps known graphs") {
  for (const std::string& key : catalog_keys()) {
    const Graph g = named(key);
    CHECK(complement(complement(g)) == g);
  }
  CHECK(complement(named("complete(4)")) == named("fourK1"));

  // the five-cycle is self-complementary up to isomorphism
  CHECK(canonical_code(complement(named("c5"))) ==
        canonical_code(named("c5")));
  CHECK(complement(named("c5")) != named("c5"));
}

TEST_CASE("clique and stable-set helpers") {
  const Graph fig = named("figure1");
  CHECK(is_clique(fig, VertexSet{4, 5, 0}));
  CHECK(!is_clique(fig, VertexSet{0, 1, 2}));
  CHECK(is_clique(fig, VertexSet{}));
  CHECK(is_stable_set(fig, VertexSet{1, 3, 6, 9}));
  CHECK(!is_stable_set(fig, VertexSet{0, 1}));
}
