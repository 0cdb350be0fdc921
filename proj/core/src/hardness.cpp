#include "perfdiv/hardness.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace perfdiv {

namespace {

void require_triangle_free_with_edge(const Graph& g, const char* op) {
  if (g.edge_count() == 0)
    throw std::invalid_argument(std::string(op) + ": graph has no edge");
  if (omega(g).size > 2)
    throw std::invalid_argument(std::string(op) + ": graph has a triangle");
}

}  // namespace

GoodPartition coloring_to_good_partition(const Graph& g, const Coloring& col) {
  require_triangle_free_with_edge(g, "coloring_to_good_partition");
  if (col.k > 3 || !col.proper_for(g))
    throw std::invalid_argument(
        "coloring_to_good_partition: not a proper coloring on <= 3 colors");
  GoodPartition gp{VertexSet{}, VertexSet{}, g};
  for (int v = 0; v < g.size(); ++v) {
    if (col.assignment[static_cast<std::size_t>(v)] <= 1)
      gp.a = gp.a.with(v);
    else
      gp.b = gp.b.with(v);
  }
  gp.validate();  // guaranteed for valid inputs
  return gp;
}

Coloring good_partition_to_coloring(const Graph& g, const GoodPartition& gp) {
  require_triangle_free_with_edge(g, "good_partition_to_coloring");
  if (gp.ambient != g || gp.universe() != g.vertices())
    throw std::invalid_argument(
        "good_partition_to_coloring: partition does not cover g");
  gp.validate();

  // G[a] is perfect and triangle-free, so bipartite; 2-color it by BFS.
  Coloring col;
  col.assignment.assign(static_cast<std::size_t>(g.size()), -1);
  for (std::uint64_t m = gp.b.bits; m; m &= m - 1)
    col.assignment[static_cast<std::size_t>(std::countr_zero(m))] = 2;
  for (std::uint64_t seeds = gp.a.bits; seeds; seeds &= seeds - 1) {
    const int s = std::countr_zero(seeds);
    if (col.assignment[static_cast<std::size_t>(s)] != -1) continue;
    col.assignment[static_cast<std::size_t>(s)] = 0;
    std::vector<int> queue{s};
    while (!queue.empty()) {
      const int v = queue.back();
      queue.pop_back();
      for (std::uint64_t m = (g.neighbors(v) & gp.a).bits; m; m &= m - 1) {
        const int u = std::countr_zero(m);
        if (col.assignment[static_cast<std::size_t>(u)] == -1) {
          col.assignment[static_cast<std::size_t>(u)] =
              1 - col.assignment[static_cast<std::size_t>(v)];
          queue.push_back(u);
        } else if (col.assignment[static_cast<std::size_t>(u)] ==
                   col.assignment[static_cast<std::size_t>(v)]) {
          throw std::logic_error(
              "good_partition_to_coloring: perfect triangle-free side is not "
              "bipartite");
        }
      }
    }
  }
  col.k = 0;
  for (int c : col.assignment) col.k = std::max(col.k, c + 1);
  if (!col.proper_for(g))
    throw std::logic_error("good_partition_to_coloring: improper result");
  return col;
}

EquivalenceReport pd_equals_3colorable(const Graph& g, int cap) {
  if (omega(g).size > 2)
    throw std::invalid_argument("pd_equals_3colorable: graph has a triangle");
  EquivalenceReport r;
  r.perfectly_divisible = is_perfectly_divisible(g, cap).holds;
  r.three_colorable = is_k_colorable(g, 3).has_value();
  r.agree = (r.perfectly_divisible == r.three_colorable);
  return r;
}

}  // namespace perfdiv
