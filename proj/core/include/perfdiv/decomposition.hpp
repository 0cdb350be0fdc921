#ifndef PERFDIV_DECOMPOSITION_HPP
#define PERFDIV_DECOMPOSITION_HPP

#include <array>
#include <optional>
#include <vector>

#include "perfdiv/divisibility.hpp"
#include "perfdiv/perfection.hpp"

namespace perfdiv {

/// Clique cutset c with the two separated vertex groups: no edges between v1
/// and v2, all three sets partition V(ambient), v1 and v2 nonempty. v1 is
/// the component of G - c holding the least vertex; any further components
/// are grouped into v2.
struct CutsetSplit {
  VertexSet c, v1, v2;
  Graph ambient;

  VertexSet side1() const { return c | v1; }
  VertexSet side2() const { return c | v2; }

  void validate() const;  // throws std::invalid_argument
};

/// Vertices whose neighbourhood induces a clique, ascending.
std::vector<int> find_simplicial(const Graph& g);

/// Vertices whose neighbourhood is coverable by two cliques, i.e. the
/// complement of the neighbourhood is bipartite. Ascending.
std::vector<int> find_bisimplicial(const Graph& g);

/// Streams cliques in increasing size, lexicographic within size, and
/// returns the split for the first one whose removal disconnects g. A
/// disconnected input yields the empty-clique split.
std::optional<CutsetSplit> find_clique_cutset(const Graph& g);

/// Split of g along a given clique cutset. Throws when c is not a clique or
/// does not disconnect.
CutsetSplit split_on_cutset(const Graph& g, VertexSet c);

/// Inclusion-minimal cutset inside c, by greedy single-vertex removal in
/// ascending order. Throws when c is not a cutset.
VertexSet minimize_cutset(const Graph& g, VertexSet c);

/// Outcome of merging good partitions across a clique cutset:
/// a = a1 | a2, b = (b1 - a2) | (b2 - a1). omega_ok records the recomputed
/// clique-number drop on b (provably always true for valid inputs);
/// a_perfect may fail, in which case the imperfection witness is attached.
struct CombinationReport {
  VertexSet a, b;
  bool omega_ok = false;
  bool a_perfect = false;
  WitnessKind kind = WitnessKind::none;
  std::optional<HoleCertificate> witness;
};

/// gp1 and gp2 must be good partitions of G[c|v1] and G[c|v2] in g's
/// numbering; inputs are re-validated.
CombinationReport combine_good_partitions(const Graph& g,
                                          const CutsetSplit& split,
                                          const GoodPartition& gp1,
                                          const GoodPartition& gp2);

/// When G[c|v1] is perfect, (a2 | v1, b2) is a good partition of g; the
/// result is re-validated and a validation failure is a hard internal error.
GoodPartition one_side_perfect_partition(const Graph& g,
                                         const CutsetSplit& split,
                                         const GoodPartition& gp2);

/// Five vertices inducing a chordless path in g, assembled from a failed
/// combination report: a witness vertex in the cutset plus its neighbour on
/// the opposite side. Requires a minimized cutset; the selection on the
/// hole/antihole is derived exhaustively and the output re-verified.
std::array<int, 5> extract_p5_witness(const Graph& g, const CutsetSplit& split,
                                      const CombinationReport& report);

}  // namespace perfdiv

#endif
