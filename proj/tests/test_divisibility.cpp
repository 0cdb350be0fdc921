#include "doctest.h"
#include "oracles.hpp"
#include "perfdiv/catalog.hpp"
#include "perfdiv/conjectures.hpp"
#include "perfdiv/divisibility.hpp"
#include "perfdiv/invariants.hpp"
#include "perfdiv/perfection.hpp"

using namespace perfdiv;

namespace {

// literal-definition helpers, composed naively from library primitives
bool has_gp_naive(const Graph& g) {
  const int w = omega(g).size;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << g.size()); ++b) {
    const VertexSet bside(b);
    if (omega_within(g, bside).size >= w) continue;
    if (is_perfect(induced(g, g.vertices() - bside).graph).perfect) return true;
  }
  return false;
}

bool pd_naive(const Graph& g) {
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.size()); ++s) {
    const VertexSet set(s);
    const Graph h = induced(g, set).graph;
    if (h.edge_count() == 0) continue;
    if (!has_gp_naive(h)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("find_good_partition ordering and fast path") {
  SUBCASE("five-cycle takes the first single-vertex b") {
    const auto gp = find_good_partition(named("c5"));
    REQUIRE(gp.has_value());
    CHECK(gp->b == VertexSet{0});
    CHECK(gp->a == VertexSet{1, 2, 3, 4});
    gp->validate();
  }

  SUBCASE("perfect graphs return (V, empty) immediately") {
    const auto gp = find_good_partition(named("complete(4)"));
    REQUIRE(gp.has_value());
    CHECK(gp->a == VertexSet{0, 1, 2, 3});
    CHECK(gp->b.empty());
    const auto single = find_good_partition(Graph::from_edges(1, {}));
    REQUIRE(single.has_value());
    CHECK(single->a == VertexSet{0});
  }

  SUBCASE("the grotzsch graph admits none") {
    CHECK(!find_good_partition(named("grotzsch")).has_value());
  }

  SUBCASE("degenerate and capped inputs error") {
    CHECK_THROWS_AS(find_good_partition(Graph::from_edges(0, {})),
                    std::invalid_argument);
    CHECK_THROWS_AS(find_good_partition(random_graph(23, 0.5, 1)),
                    CapExceeded);
  }

  SUBCASE("returned partitions validate on random inputs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const Graph g = random_graph(8, 0.5, 5000 + seed);
      const auto gp = find_good_partition(g);
      REQUIRE(gp.has_value());  // a failure here would be a tiny non-divisible graph
      gp->validate();
      CHECK(has_gp_naive(g));
    }
  }
}

TEST_CASE("good partition validation rejects forgeries") {
  const Graph c5 = named("c5");
  CHECK_THROWS_AS((GoodPartition{VertexSet{0, 1, 2, 3, 4}, VertexSet{}, c5})
                      .validate(),
                  std::invalid_argument);  // a side imperfect
  CHECK_THROWS_AS((GoodPartition{VertexSet{0, 1}, VertexSet{1, 2}, c5})
                      .validate(),
                  std::invalid_argument);  // overlap
  CHECK_THROWS_AS((GoodPartition{VertexSet{}, VertexSet{}, c5}).validate(),
                  std::invalid_argument);  // empty universe
  CHECK_THROWS_AS((GoodPartition{VertexSet{1, 2, 3, 4}, VertexSet{0}, c5})
                      .universe() == c5.vertices()
                      ? throw std::invalid_argument("")
                      : (void)0,
                  std::invalid_argument);
}

TEST_CASE("perfect divisibility engine matches the literal definition") {
  CHECK(is_perfectly_divisible(named("c5")).holds);
  CHECK(is_perfectly_divisible(named("complete(4)")).holds);
  CHECK(is_perfectly_divisible(Graph::from_edges(0, {})).holds);

  const auto grotzsch = is_perfectly_divisible(named("grotzsch"));
  CHECK(!grotzsch.holds);
  REQUIRE(grotzsch.failing_subgraph.has_value());
  CHECK(*grotzsch.failing_subgraph == named("grotzsch").vertices());

  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Graph g = random_graph(6, 0.5, 5600 + seed);
    CHECK(is_perfectly_divisible(g).holds == pd_naive(g));
  }
}

TEST_CASE("k-divisibility of cycles and bipartite graphs") {
  const auto c5_2 = is_k_divisible(named("c5"), 2);
  CHECK(!c5_2.holds);
  CHECK(*c5_2.failing_subgraph == named("c5").vertices());

  CHECK(is_k_divisible(named("c5"), 3).holds);
  CHECK(is_k_divisible(named("k23"), 2).holds);
  CHECK(is_k_divisible(named("cycle(6)"), 2).holds);
  CHECK(!is_k_divisible(named("complete(3)"), 1).holds);
  CHECK(is_k_divisible(Graph::from_edges(3, {}), 2).holds);  // vacuous
  CHECK_THROWS_AS(is_k_divisible(named("c5"), 0), std::invalid_argument);

  const auto kp = find_k_partition(named("c5"), 3);
  REQUIRE(kp.has_value());
  kp->validate();
  CHECK(!find_k_partition(named("c5"), 2).has_value());
}

TEST_CASE("minimality decisions") {
  SUBCASE("five- and seven-cycles are minimally non-2-divisible") {
    CHECK(is_minimally_non_2_divisible(named("c5")));
    CHECK(is_minimally_non_2_divisible(named("cycle(7)")));
    CHECK(!is_minimally_non_2_divisible(named("cycle(6)")));
    CHECK(!is_minimally_non_2_divisible(named("k23")));
    CHECK(!is_minimally_non_2_divisible(named("figure1")));
  }

  SUBCASE("mnpd spot values") {
    CHECK(!is_mnpd(named("c5")));
    CHECK(!is_mnpd(named("complete(4)")));
    // regression value, recorded from the run: the grotzsch graph is
    // minimally non-perfectly-divisible
    CHECK(is_mnpd(named("grotzsch")));
  }

  SUBCASE("mnpd shortcut matches the literal definition for n <= 7") {
    for (int n = 0; n <= 7; ++n) {
      for (const Graph& g : enumerate_small(n)) {
        const bool literal = [&] {
          if (pd_naive_cached(g)) return false;
          for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.size()); ++s) {
            const VertexSet set(s);
            if (set == g.vertices()) continue;
            if (!is_perfectly_divisible(induced(g, set).graph).holds)
              return false;
          }
          return true;
        }();
        CHECK(is_mnpd(g) == literal);
      }
    }
  }
}

TEST_CASE("alpha<=2 graphs are perfectly divisible (n <= 6 sweep)") {
  for (int n = 0; n <= 6; ++n)
    for (const Graph& g : enumerate_small(n))
      if (alpha(g).size <= 2) CHECK(is_perfectly_divisible(g).holds);
}

TEST_CASE("divisibility is hereditary on samples") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_graph(8, 0.5, 6000 + seed);
    if (!is_perfectly_divisible(g).holds) continue;
    const VertexSet sub((seed * 0x9e3779b97f4a7c15ull) & 0xffull);
    CHECK(is_perfectly_divisible(induced(g, sub).graph).holds);
  }
}

TEST_CASE("partition extension around a vertex") {
  SUBCASE("pendant vertex on a five-cycle, simplicial mode") {
    GraphBuilder b(6);
    for (int i = 0; i < 5; ++i) b.add_edge(i, (i + 1) % 5);
    b.add_edge(0, 5);
    const Graph g = std::move(b).build();
    const auto gp = find_good_partition_within(g, g.vertices().without(5));
    REQUIRE(gp.has_value());
    const auto ext =
        extend_partition_around_vertex(g, 5, *gp, ExtendMode::simplicial);
    CHECK(ext.a.contains(5));
    ext.validate();
  }

  SUBCASE("isolated vertex beside a clique, nonclique mode") {
    const Graph g = Graph::from_edges(
        5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    const GoodPartition gp{VertexSet{0, 1, 2, 3}, VertexSet{}, g};
    const auto ext =
        extend_partition_around_vertex(g, 4, gp, ExtendMode::nonclique);
    CHECK(ext.a == VertexSet{0, 1, 2, 3});
    CHECK(ext.b == VertexSet{4});
    ext.validate();
  }

  SUBCASE("precondition violations") {
    // vertex with two non-adjacent neighbours is not simplicial
    const Graph path = named("path(3)");
    const GoodPartition gp{VertexSet{0, 2}, VertexSet{}, path};
    CHECK_THROWS_AS(
        extend_partition_around_vertex(path, 1, gp, ExtendMode::simplicial),
        std::invalid_argument);

    // every vertex of a complete graph lies in the maximum clique
    const Graph k3 = named("complete(3)");
    const GoodPartition gp2{VertexSet{0, 1}, VertexSet{}, k3};
    CHECK_THROWS_AS(
        extend_partition_around_vertex(k3, 2, gp2, ExtendMode::nonclique),
        std::invalid_argument);

    // partition must cover exactly V minus the vertex
    const GoodPartition bad{VertexSet{0}, VertexSet{}, k3};
    CHECK_THROWS_AS(
        extend_partition_around_vertex(k3, 2, bad, ExtendMode::simplicial),
        std::invalid_argument);
  }
}
