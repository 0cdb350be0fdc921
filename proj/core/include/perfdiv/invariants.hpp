#ifndef PERFDIV_INVARIANTS_HPP
#define PERFDIV_INVARIANTS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "perfdiv/graph.hpp"

namespace perfdiv {

struct CliqueResult {
  int size = 0;
  VertexSet witness;  // lexicographically least clique of maximum size
};

/// Clique number with witness; 0 and the empty set for the empty graph.
CliqueResult omega(const Graph& g);

/// Clique number of G[allowed].
CliqueResult omega_within(const Graph& g, VertexSet allowed);

/// Stability number: omega of the complement; witness in g's numbering.
CliqueResult alpha(const Graph& g);

/// Proper coloring: vertex -> color index in 0..k-1, adjacent vertices
/// distinct.
struct Coloring {
  std::vector<int> assignment;
  int k = 0;  // number of colors used (max assigned + 1)

  bool proper_for(const Graph& g) const;
};

/// Lexicographically least proper k-coloring under ascending-index
/// backtracking, or nullopt. The returned k is the number of colors actually
/// used (<= requested).
std::optional<Coloring> is_k_colorable(const Graph& g, int k);

struct ChromaticResult {
  int chi = 0;
  Coloring coloring;
};

/// Exact chromatic number by incremental-k backtracking from the clique
/// lower bound. chi of the empty graph is 0.
ChromaticResult chi(const Graph& g, int cap = kDecisionCap);

/// Every inclusion-maximal clique exactly once, sorted by ascending vertex
/// list (lexicographic).
std::vector<VertexSet> maximal_cliques(const Graph& g);

/// Streams every clique of g -- non-maximal and the empty set included -- in
/// increasing size, lexicographic within size. Return true from the visitor
/// to stop.
void for_each_clique(const Graph& g,
                     const std::function<bool(VertexSet)>& visit);

/// Connected components, each reported as a VertexSet, ordered by least
/// vertex.
std::vector<VertexSet> components(const Graph& g);
std::vector<VertexSet> components_within(const Graph& g, VertexSet allowed);

bool is_connected(const Graph& g);

}  // namespace perfdiv

#endif
