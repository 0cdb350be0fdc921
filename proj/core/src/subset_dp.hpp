#ifndef PERFDIV_SUBSET_DP_HPP
#define PERFDIV_SUBSET_DP_HPP

// Internal dynamic programming over vertex subsets (n <= ~20). Used by the
// perfection oracle and the divisibility engine.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "perfdiv/graph.hpp"

namespace perfdiv::detail {

struct SubsetTables {
  int n = 0;
  std::uint32_t full = 0;
  std::vector<std::uint32_t> nbr;
  std::vector<std::uint8_t> omega;     // clique number per subset
  std::vector<std::uint8_t> has_edge;  // subset spans at least one edge
  std::vector<std::uint8_t> chi;       // chromatic number per subset
  std::vector<std::uint8_t> perfect;   // hereditary chi == omega
  std::vector<std::uint8_t> has_gp;    // subset admits a good partition

  static SubsetTables base(const Graph& g) {
    if (g.size() > 20)
      throw std::invalid_argument("subset tables limited to n <= 20");
    SubsetTables t;
    t.n = g.size();
    t.full = (t.n == 0) ? 0 : (std::uint32_t{1} << t.n) - 1;
    t.nbr.resize(static_cast<std::size_t>(t.n));
    for (int v = 0; v < t.n; ++v)
      t.nbr[static_cast<std::size_t>(v)] =
          static_cast<std::uint32_t>(g.neighbors(v).bits);
    t.omega.assign(std::size_t{t.full} + 1, 0);
    t.has_edge.assign(std::size_t{t.full} + 1, 0);
    for (std::uint32_t s = 1; s <= t.full; ++s) {
      const int v = std::countr_zero(s);
      const std::uint32_t rest = s & (s - 1);
      const std::uint32_t nb = t.nbr[static_cast<std::size_t>(v)];
      t.omega[s] = static_cast<std::uint8_t>(
          std::max<int>(t.omega[rest], 1 + t.omega[rest & nb]));
      t.has_edge[s] = static_cast<std::uint8_t>(t.has_edge[rest] | ((rest & nb) != 0));
      if (s == t.full) break;
    }
    return t;
  }

  void build_coloring() {
    chi.assign(std::size_t{full} + 1, 0);
    for (std::uint32_t s = 1; s <= full; ++s) {
      const int v = std::countr_zero(s);
      best_ = 0xff;
      grow_class(s, std::uint32_t{1} << v,
                 (s & (s - 1)) & ~nbr[static_cast<std::size_t>(v)]);
      chi[s] = best_;
      if (s == full) break;
    }
  }

  void build_perfect() {
    perfect.assign(std::size_t{full} + 1, 1);
    for (std::uint32_t s = 1; s <= full; ++s) {
      std::uint8_t ok = (chi[s] == omega[s]);
      for (std::uint32_t m = s; ok && m; m &= m - 1)
        ok = perfect[s & ~(m & (-m))];
      perfect[s] = ok;
      if (s == full) break;
    }
  }

  void build_good_partition() {
    has_gp.assign(std::size_t{full} + 1, 0);
    for (std::uint32_t s = 1; s <= full; ++s) {
      if (perfect[s]) {
        has_gp[s] = 1;  // (s, empty): omega(empty) = 0 < omega(s)
      } else {
        for (std::uint32_t b = (s - 1) & s; b; b = (b - 1) & s)
          if (omega[b] < omega[s] && perfect[s & ~b]) {
            has_gp[s] = 1;
            break;
          }
      }
      if (s == full) break;
    }
  }

  /// Can subset T be split into k parts, each with clique number < w?
  /// Symmetry pruned: the part holding the least vertex is enumerated first.
  std::vector<std::uint8_t> k_partition_table(int k, int w) const {
    std::vector<std::uint8_t> ok(std::size_t{full} + 1, 0);
    for (std::uint32_t t = 0; t <= full; ++t) {
      ok[t] = (omega[t] < w);
      if (t == full) break;
    }
    for (int layer = 2; layer <= k; ++layer) {
      std::vector<std::uint8_t> next(std::size_t{full} + 1, 0);
      for (std::uint32_t t = 0; t <= full; ++t) {
        if (t == 0) {
          next[t] = 1;
        } else {
          const std::uint32_t low = t & (-t);
          // parts containing the least vertex of t
          for (std::uint32_t p = t;; p = (p - 1) & t) {
            if ((p & low) && omega[p] < w && ok[t & ~p]) {
              next[t] = 1;
              break;
            }
            if (p == 0) break;
          }
        }
        if (t == full) break;
      }
      ok = std::move(next);
    }
    return ok;
  }

private:
  std::uint8_t best_ = 0xff;

  // Independent sets containing the least vertex, grown in ascending order.
  void grow_class(std::uint32_t s, std::uint32_t klass, std::uint32_t allowed) {
    const std::uint8_t cand = static_cast<std::uint8_t>(1 + chi[s & ~klass]);
    if (cand < best_) best_ = cand;
    while (allowed) {
      const int u = std::countr_zero(allowed);
      allowed &= allowed - 1;
      grow_class(s, klass | (std::uint32_t{1} << u),
                 allowed & ~nbr[static_cast<std::size_t>(u)]);
    }
  }
};

}  // namespace perfdiv::detail

#endif
