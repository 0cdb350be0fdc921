#ifndef PERFDIV_PATTERNS_HPP
#define PERFDIV_PATTERNS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "perfdiv/graph.hpp"

namespace perfdiv {

/// Injective map pattern vertex -> host vertex preserving both adjacency and
/// non-adjacency.
struct Embedding {
  std::vector<int> map;  // indexed by pattern vertex

  bool valid_for(const Graph& host, const Graph& pattern) const;
  VertexSet image() const;
};

/// First induced embedding of pattern into host under ascending host-vertex
/// backtracking, or nullopt. Pattern vertices are matched in descending
/// degree order for pruning; the result is still the first embedding in
/// host-vertex order for that fixed matching order.
std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern);

struct FreenessResult {
  bool free = true;
  std::size_t pattern_index = 0;       // valid when !free
  std::optional<Embedding> violation;  // present when !free
};

/// True iff no pattern in the list embeds as an induced subgraph; otherwise
/// the first violation found (patterns tried in the given order).
FreenessResult is_l_free(const Graph& g, const std::vector<Graph>& patterns);

enum class Parity { odd, even, any };

/// Chordless cycle certificate: consecutive vertices adjacent (cyclically),
/// all other pairs non-adjacent, length >= 4.
struct HoleCertificate {
  std::vector<int> cycle;

  int length() const { return static_cast<int>(cycle.size()); }
  bool odd() const { return length() % 2 == 1; }
  bool valid_for(const Graph& g) const;
};

/// Shortest chordless cycle of the requested parity and length >= min_len,
/// or nullopt. Deterministic: lengths ascending, anchored at the least cycle
/// vertex, candidates ascending. min_len must be >= 4.
std::optional<HoleCertificate> find_hole(const Graph& g, Parity parity,
                                         int min_len = 4);

/// Shortest odd antihole: find_hole(complement(g), odd, min_len) with the
/// certificate expressed in g's vertices (it validates against
/// complement(g)).
std::optional<HoleCertificate> find_odd_antihole(const Graph& g,
                                                 int min_len = 5);

}  // namespace perfdiv

#endif
