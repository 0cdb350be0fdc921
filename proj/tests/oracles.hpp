#ifndef PERFDIV_TEST_ORACLES_HPP
#define PERFDIV_TEST_ORACLES_HPP

// Brute-force reference implementations used to freeze expected values.
// These stay independent of the library's search paths: subset scans and
// bit-by-bit encodings only.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "perfdiv/graph.hpp"

namespace oracles {

using perfdiv::Graph;
using perfdiv::VertexSet;

// Largest clique size by scanning all 2^n subsets.
inline int max_clique_subset_scan(const Graph& g) {
  int best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.size()); ++s) {
    const VertexSet set(s);
    if (set.count() > best && perfdiv::is_clique(g, set)) best = set.count();
  }
  return best;
}

// All maximal cliques by subset scan: cliques no neighbour extends.
inline std::vector<VertexSet> maximal_cliques_subset_scan(const Graph& g) {
  std::vector<VertexSet> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.size()); ++s) {
    const VertexSet set(s);
    if (!perfdiv::is_clique(g, set)) continue;
    bool maximal = true;
    for (int v = 0; v < g.size() && maximal; ++v)
      if (!set.contains(v) && perfdiv::is_clique(g, set.with(v)))
        maximal = false;
    if (maximal) out.push_back(set);
  }
  return out;
}

// Does some subset of the requested parity induce a chordless cycle of
// length >= min_len? A subset induces a cycle iff it is connected and
// 2-regular in the induced subgraph.
inline bool has_hole_subset_scan(const Graph& g, bool odd_only, int min_len) {
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.size()); ++s) {
    const VertexSet set(s);
    const int size = set.count();
    if (size < min_len) continue;
    if (odd_only && size % 2 == 0) continue;
    bool two_regular = true;
    for (std::uint64_t m = s; two_regular && m; m &= m - 1)
      two_regular =
          (g.neighbors(std::countr_zero(m)) & set).count() == 2;
    if (!two_regular) continue;
    if (perfdiv::induced(g, set).graph.edge_count() != size) continue;
    // connected 2-regular spanning subgraph of G[set] == a single cycle;
    // 2-regularity of the induced graph forces chordlessness
    std::uint64_t comp = s & (~s + 1);
    for (;;) {
      std::uint64_t grown = comp;
      for (std::uint64_t m = comp; m; m &= m - 1)
        grown |= g.neighbors(std::countr_zero(m)).bits & s;
      if (grown == comp) break;
      comp = grown;
    }
    if (comp == s) return true;
  }
  return false;
}

// Bit-by-bit graph6 encoder, no packing tricks shared with the library.
inline std::string g6_reference_encode(const Graph& g) {
  std::string bits;
  for (int j = 1; j < g.size(); ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? '1' : '0');
  while (bits.size() % 6 != 0) bits.push_back('0');
  std::string out(1, static_cast<char>(g.size() + 63));
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int value = 0;
    for (std::size_t b = 0; b < 6; ++b)
      value = value * 2 + (bits[k + b] == '1');
    out.push_back(static_cast<char>(value + 63));
  }
  return out;
}

// Exhaustive proper-coloring check with at most k colors, plain k^n loop
// with early pruning; independent of the library's backtracker.
inline bool colorable_reference(const Graph& g, int k) {
  const int n = g.size();
  if (n == 0) return true;
  if (k == 0) return false;
  std::vector<int> color(static_cast<std::size_t>(n), 0);
  int v = 0;
  while (true) {
    bool clash = false;
    for (std::uint64_t m =
             g.neighbors(v).bits & ((std::uint64_t{1} << v) - 1);
         m && !clash; m &= m - 1)
      clash = color[static_cast<std::size_t>(std::countr_zero(m))] ==
              color[static_cast<std::size_t>(v)];
    if (!clash) {
      if (v == n - 1) return true;
      ++v;
      color[static_cast<std::size_t>(v)] = 0;
      continue;
    }
    while (true) {
      if (color[static_cast<std::size_t>(v)] + 1 < k) {
        ++color[static_cast<std::size_t>(v)];
        break;
      }
      if (v == 0) return false;
      --v;
    }
  }
}

}  // namespace oracles

#endif
