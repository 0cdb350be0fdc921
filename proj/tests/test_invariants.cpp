#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "perfdiv/catalog.hpp"
#include "perfdiv/conjectures.hpp"
#include "perfdiv/invariants.hpp"

using namespace perfdiv;

TEST_CASE("clique number with lexicographically least witness") {
  CHECK(omega(named("complete(4)")).size == 4);
  CHECK(omega(named("c5")).size == 2);
  CHECK(omega(Graph::from_edges(0, {})).size == 0);
  CHECK(omega(Graph::from_edges(3, {})).size == 1);

  const auto fig = omega(named("figure1"));
  CHECK(fig.size == 3);
  CHECK(fig.witness == VertexSet{0, 4, 5});  // {A,E,F} beats {E,F,J}

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_graph(8, 0.5, 900 + seed);
    CHECK(omega(g).size == oracles::max_clique_subset_scan(g));
    CHECK(is_clique(g, omega(g).witness));
  }
}

TEST_CASE("stability number is the complement's clique number") {
  CHECK(alpha(named("fourK1")).size == 4);
  CHECK(alpha(named("complete(4)")).size == 1);
  CHECK(alpha(named("c5")).size == 2);
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Graph g = random_graph(7, 0.5, 1200 + seed);
    CHECK(alpha(g).size == omega(complement(g)).size);
    CHECK(is_stable_set(g, alpha(g).witness));
  }
}

TEST_CASE("exact chromatic number") {
  CHECK(chi(named("c5")).chi == 3);
  CHECK(chi(Graph::from_edges(3, {})).chi == 1);
  CHECK(chi(Graph::from_edges(0, {})).chi == 0);
  CHECK(chi(named("petersen")).chi == 3);

  const auto grotzsch = chi(named("grotzsch"));
  CHECK(grotzsch.chi == 4);
  CHECK(grotzsch.coloring.proper_for(named("grotzsch")));
  CHECK_FALSE(oracles::colorable_reference(named("grotzsch"), 3));

  CHECK_THROWS_AS(chi(random_graph(17, 0.5, 3)), CapExceeded);

  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Graph g = random_graph(7, 0.45, 1500 + seed);
    const auto result = chi(g);
    CHECK(result.coloring.proper_for(g));
    CHECK(oracles::colorable_reference(g, result.chi));
    if (result.chi > 0)
      CHECK_FALSE(oracles::colorable_reference(g, result.chi - 1));
    CHECK(omega(g).size <= result.chi);
    CHECK(result.chi <= g.size());
  }
}

TEST_CASE("k-colorability is deterministic and lexicographically least") {
  const auto c5 = is_k_colorable(named("c5"), 3);
  REQUIRE(c5.has_value());
  CHECK(c5->assignment == std::vector<int>{0, 1, 0, 1, 2});
  CHECK(c5->k == 3);

  CHECK(!is_k_colorable(named("c5"), 2));
  CHECK(!is_k_colorable(named("complete(3)"), 2));
  CHECK(!is_k_colorable(named("grotzsch"), 3));
  REQUIRE(is_k_colorable(named("petersen"), 3));
  CHECK(is_k_colorable(named("petersen"), 3)->proper_for(named("petersen")));
  CHECK(is_k_colorable(Graph::from_edges(0, {}), 0).has_value());
  CHECK(!is_k_colorable(Graph::from_edges(1, {}), 0).has_value());
  CHECK_THROWS_AS(is_k_colorable(named("c5"), -1), std::invalid_argument);
}

TEST_CASE("maximal clique listing") {
  const auto k4 = maximal_cliques(named("complete(4)"));
  REQUIRE(k4.size() == 1);
  CHECK(k4[0] == VertexSet{0, 1, 2, 3});

  const auto c5 = maximal_cliques(named("c5"));
  CHECK(c5.size() == 5);  // exactly the five edges
  for (const VertexSet& c : c5) CHECK(c.count() == 2);

  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Graph g = random_graph(7, 0.5, 2100 + seed);
    auto got = maximal_cliques(g);
    auto expect = oracles::maximal_cliques_subset_scan(g);
    std::sort(expect.begin(), expect.end(),
              [](VertexSet a, VertexSet b) { return lex_less(a, b); });
    CHECK(got == expect);
  }
}

TEST_CASE("maximum cliques of figure1 via the clique stream") {
  const Graph fig = named("figure1");
  std::vector<VertexSet> triangles;
  int seen = 0;
  for_each_clique(fig, [&](VertexSet c) {
    ++seen;
    if (c.count() == 3) triangles.push_back(c);
    return false;
  });
  CHECK(triangles == std::vector<VertexSet>{{0, 4, 5}, {4, 5, 9}});
  // 1 empty + 10 vertices + 13 edges + 2 triangles
  CHECK(seen == 26);
}

TEST_CASE("components and connectivity") {
  const Graph fig = named("figure1");
  const auto split = components_within(fig, fig.vertices() - VertexSet{4, 5});
  REQUIRE(split.size() == 2);
  CHECK(split[0] == VertexSet{0, 1, 2, 3});
  CHECK(split[1] == VertexSet{6, 7, 8, 9});

  CHECK(components(named("complete(4)")).size() == 1);
  CHECK(components(Graph::from_edges(3, {})).size() == 3);
  CHECK(is_connected(fig));
  CHECK(is_connected(Graph::from_edges(0, {})));
  CHECK(!is_connected(Graph::from_edges(2, {})));
}
