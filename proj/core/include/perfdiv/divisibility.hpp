#ifndef PERFDIV_DIVISIBILITY_HPP
#define PERFDIV_DIVISIBILITY_HPP

#include <optional>
#include <vector>

#include "perfdiv/graph.hpp"

namespace perfdiv {

/// Partition (a, b) of a vertex universe of the ambient graph with G[a]
/// perfect and omega(G[b]) < omega(G[a | b]). Sets are in the ambient
/// graph's numbering; for top-level partitions the universe is V(ambient),
/// for side partitions it is the side's vertex set.
struct GoodPartition {
  VertexSet a, b;
  Graph ambient;

  VertexSet universe() const { return a | b; }

  /// Recomputes the defining conditions from scratch (disjointness,
  /// perfection of G[a], strict clique-number drop on b). Throws
  /// std::invalid_argument on violation.
  void validate() const;
};

/// Partition of a universe into k parts, none containing a largest clique of
/// the universe's induced subgraph.
struct KPartition {
  std::vector<VertexSet> parts;
  Graph ambient;

  void validate() const;
};

struct DivisibilityVerdict {
  bool holds = true;
  std::optional<VertexSet> failing_subgraph;  // has an edge, no partition
};

/// First good partition of G[universe] with b enumerated in increasing size,
/// lexicographic within size; perfect graphs short-circuit to (universe, {}).
/// Errors: empty universe; |universe| > cap.
std::optional<GoodPartition> find_good_partition_within(
    const Graph& g, VertexSet universe, int cap = kPartitionSearchCap);

std::optional<GoodPartition> find_good_partition(
    const Graph& g, int cap = kPartitionSearchCap);

/// Holds iff every induced subgraph with at least one edge admits a good
/// partition. A failing subgraph of minimum vertex count is reported.
DivisibilityVerdict is_perfectly_divisible(const Graph& g,
                                           int cap = kDecisionCap);

/// Holds iff every induced subgraph H with at least one edge splits into k
/// parts, none containing a largest clique of H.
DivisibilityVerdict is_k_divisible(const Graph& g, int k,
                                   int cap = kDecisionCap);

/// Witness k-partition for g itself (not the hereditary decision), if any.
std::optional<KPartition> find_k_partition(const Graph& g, int k,
                                           int cap = kDecisionCap);

/// Minimally non-perfectly-divisible: no good partition of g itself, while
/// every proper induced subgraph with an edge has one (equivalent to the
/// literal definition since perfect divisibility is hereditary).
bool is_mnpd(const Graph& g, int cap = kDecisionCap);

bool is_minimally_non_2_divisible(const Graph& g, int cap = kDecisionCap);

enum class ExtendMode { nonclique, simplicial };

/// Lifts a good partition of g - x to one of g: nonclique mode adds x to the
/// b side (x must lie in no maximum clique of g), simplicial mode adds x to
/// the a side (the neighbourhood of x must be a clique). The input partition
/// must cover V(g) - x in g's numbering; the result is re-validated.
GoodPartition extend_partition_around_vertex(const Graph& g, int x,
                                             const GoodPartition& gp,
                                             ExtendMode mode);

}  // namespace perfdiv

#endif
