#include "doctest.h"
#include "oracles.hpp"
#include "perfdiv/catalog.hpp"
#include "perfdiv/conjectures.hpp"
#include "perfdiv/patterns.hpp"

using namespace perfdiv;

TEST_CASE("induced pattern embedding") {
  const Graph fig = named("figure1");

  SUBCASE("figure1 contains a chordless five-vertex path") {
    const auto e = find_induced(fig, named("p5"));
    REQUIRE(e.has_value());
    CHECK(e->valid_for(fig, named("p5")));
  }

  SUBCASE("complete host has no stable pattern") {
    CHECK(!find_induced(named("complete(4)"), named("fourK1")));
  }

  SUBCASE("cycle hosts a path") {
    const auto e = find_induced(named("c5"), named("path(4)"));
    REQUIRE(e.has_value());
    CHECK(e->valid_for(named("c5"), named("path(4)")));
  }

  SUBCASE("embeddings re-verify on random host/pattern pairs") {
    const std::vector<std::string> keys = {"p5", "c5",     "k23",
                                           "bull", "fork", "banner"};
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const Graph host = random_graph(9, 0.45, 3000 + seed);
      const Graph& pat = named(keys[seed % keys.size()]);
      if (auto e = find_induced(host, pat)) CHECK(e->valid_for(host, pat));
    }
  }
}

TEST_CASE("pattern freeness") {
  CHECK(is_l_free(named("c5"), {named("p5")}).free);
  CHECK(is_l_free(named("c5"), {named("complete(3)")}).free);

  const auto hit = is_l_free(named("figure1"), {named("p5")});
  CHECK(!hit.free);
  REQUIRE(hit.violation.has_value());
  CHECK(hit.violation->valid_for(named("figure1"), named("p5")));

  // freeness is hereditary
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Graph g = random_graph(8, 0.4, 3300 + seed);
    if (!is_l_free(g, {named("bull")}).free) continue;
    const VertexSet sub((seed * 2654435761u) & 0xffu);
    CHECK(is_l_free(induced(g, sub).graph, {named("bull")}).free);
  }
}

TEST_CASE("hole search by parity and length") {
  const Graph fig = named("figure1");
  const auto hole = find_hole(fig, Parity::odd, 5);
  REQUIRE(hole.has_value());
  CHECK(hole->cycle == std::vector<int>{0, 1, 2, 3, 5});  // A-B-C-D-F
  CHECK(hole->odd());
  CHECK(hole->valid_for(fig));

  CHECK(!find_hole(named("complete(4)"), Parity::any, 4));
  const auto c6 = find_hole(named("cycle(6)"), Parity::even, 4);
  REQUIRE(c6.has_value());
  CHECK(c6->length() == 6);
  CHECK(!find_hole(named("cycle(6)"), Parity::odd, 5));
  CHECK(find_hole(named("cycle(4)"), Parity::any, 4));
  CHECK(!find_hole(named("complete(3)"), Parity::any, 4));
  CHECK_THROWS_AS(find_hole(fig, Parity::any, 3), std::invalid_argument);

  SUBCASE("agreement with the subset-scan oracle") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const int n = 5 + static_cast<int>(seed % 5);  // up to 9
      const Graph g = random_graph(n, 0.35 + 0.1 * (seed % 4), 3600 + seed);
      CHECK(find_hole(g, Parity::odd, 5).has_value() ==
            oracles::has_hole_subset_scan(g, true, 5));
      CHECK(find_hole(g, Parity::any, 4).has_value() ==
            oracles::has_hole_subset_scan(g, false, 4));
    }
  }
}

TEST_CASE("odd antiholes come from the complement") {
  const Graph anti7 = complement(named("cycle(7)"));
  const auto cert = find_odd_antihole(anti7);
  REQUIRE(cert.has_value());
  CHECK(cert->length() == 7);
  CHECK(cert->valid_for(complement(anti7)));

  // the five-cycle is its own antihole
  const auto c5 = find_odd_antihole(named("c5"));
  REQUIRE(c5.has_value());
  CHECK(c5->length() == 5);

  // bipartite graphs have none (complement of bipartite: no odd hole >= 5)
  CHECK(!find_odd_antihole(named("k23")));
  CHECK(!find_odd_antihole(named("cycle(6)")));
}
