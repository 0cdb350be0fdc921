#include <algorithm>
#include <vector>

#include "doctest.h"
#include "perfdiv/catalog.hpp"
#include "perfdiv/graph.hpp"

using namespace perfdiv;

namespace {

// exhaustive triple scan
bool triangle_free(const Graph& g) {
  for (int a = 0; a < g.size(); ++a)
    for (int b = a + 1; b < g.size(); ++b)
      for (int c = b + 1; c < g.size(); ++c)
        if (g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c))
          return false;
  return true;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> degs;
  for (int v = 0; v < g.size(); ++v) degs.push_back(g.degree(v));
  std::sort(degs.begin(), degs.end());
  return degs;
}

}  // namespace

TEST_CASE("catalog constructions are deterministic and correctly sized") {
  for (const std::string& key : catalog_keys()) {
    const Graph g = named(key);
    CHECK(g == named(key));
    CHECK(g.label() == key);
  }

  CHECK(named("figure1").size() == 10);
  CHECK(named("figure1").edge_count() == 13);

  const Graph grotzsch = named("grotzsch");
  CHECK(grotzsch.size() == 11);
  CHECK(grotzsch.edge_count() == 20);
  CHECK(triangle_free(grotzsch));

  const Graph petersen = named("petersen");
  CHECK(petersen.size() == 10);
  CHECK(petersen.edge_count() == 15);
  CHECK(degree_sequence(petersen) == std::vector<int>(10, 3));
  CHECK(triangle_free(petersen));

  CHECK(named("c5") == named("cycle(5)"));
  CHECK(named("p5") == named("path(5)"));
  CHECK(named("fourK1").edge_count() == 0);
  CHECK(named("k23").edge_count() == 6);
  CHECK(degree_sequence(named("k23")) == std::vector<int>{2, 2, 2, 3, 3});
}

TEST_CASE("small pattern shapes") {
  CHECK(degree_sequence(named("bull")) == std::vector<int>{1, 1, 2, 3, 3});
  CHECK(degree_sequence(named("fork")) == std::vector<int>{1, 1, 1, 2, 3});
  CHECK(degree_sequence(named("banner")) == std::vector<int>{1, 2, 2, 2, 3});
  CHECK(degree_sequence(named("dart")) == std::vector<int>{1, 2, 2, 3, 4});
  CHECK(named("bull").edge_count() == 5);
  CHECK(named("banner").edge_count() == 5);
  CHECK(named("dart").edge_count() == 6);
}

TEST_CASE("parametric keys and errors") {
  CHECK(named("complete(4)").edge_count() == 6);
  CHECK(named("path(1)").size() == 1);
  CHECK(named("cycle(7)").edge_count() == 7);
  CHECK_THROWS_AS(named("nope"), std::invalid_argument);
  CHECK_THROWS_AS(named("cycle(2)"), std::invalid_argument);
  CHECK_THROWS_AS(named("complete(63)"), std::invalid_argument);
  CHECK_THROWS_AS(named("complete(x)"), std::invalid_argument);
  CHECK_THROWS_AS(named("complete()"), std::invalid_argument);
}
