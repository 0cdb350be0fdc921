#ifndef PERFDIV_HARDNESS_HPP
#define PERFDIV_HARDNESS_HPP

#include "perfdiv/divisibility.hpp"
#include "perfdiv/invariants.hpp"

namespace perfdiv {

/// For a triangle-free graph with an edge and a proper coloring on at most
/// three colors: a = colors {0,1}, b = color {2}. G[a] is bipartite hence
/// perfect and omega(G[b]) = 1 < omega(g) = 2; the result is re-validated.
GoodPartition coloring_to_good_partition(const Graph& g, const Coloring& col);

/// Inverse direction: 2-color the perfect triangle-free a side (bipartite),
/// give b the third color. The input partition is re-validated first.
Coloring good_partition_to_coloring(const Graph& g, const GoodPartition& gp);

struct EquivalenceReport {
  bool perfectly_divisible = false;
  bool three_colorable = false;
  bool agree = false;
};

/// Computes both sides of the triangle-free equivalence independently
/// (divisibility engine vs. coloring backtracker) and reports agreement.
EquivalenceReport pd_equals_3colorable(const Graph& g, int cap = kDecisionCap);

}  // namespace perfdiv

#endif
