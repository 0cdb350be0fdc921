#include "perfdiv/divisibility.hpp"

#include <bit>
#include <map>
#include <stdexcept>

#include "perfdiv/invariants.hpp"
#include "perfdiv/perfection.hpp"
#include "subset_dp.hpp"

namespace perfdiv {

namespace {

bool perfect_within(const Graph& g, VertexSet s) {
  const auto sub = induced(g, s);
  return is_perfect(sub.graph, sub.graph.size()).perfect;
}

// Subsets of `universe` with exactly `size` members, ascending-vertex-list
// lexicographic order. Visitor returns true to stop.
bool subsets_of_size(const std::vector<int>& universe, int size,
                     std::size_t from, VertexSet acc,
                     const std::function<bool(VertexSet)>& visit) {
  if (size == 0) return visit(acc);
  for (std::size_t i = from; i + static_cast<std::size_t>(size) <= universe.size(); ++i)
    if (subsets_of_size(universe, size - 1, i + 1,
                        acc.with(universe[i]), visit))
      return true;
  return false;
}

}  // namespace

void GoodPartition::validate() const {
  if (a.intersects(b))
    throw std::invalid_argument("good partition: sides overlap");
  const VertexSet u = universe();
  if (u.empty())
    throw std::invalid_argument("good partition: empty universe");
  if (!u.subset_of(ambient.vertices()))
    throw std::invalid_argument("good partition: outside ambient graph");
  if (!perfect_within(ambient, a))
    throw std::invalid_argument("good partition: G[a] is not perfect");
  if (omega_within(ambient, b).size >= omega_within(ambient, u).size)
    throw std::invalid_argument(
        "good partition: omega(G[b]) does not drop below omega(G)");
}

void KPartition::validate() const {
  VertexSet u;
  for (VertexSet p : parts) {
    if (p.intersects(u)) throw std::invalid_argument("k-partition: parts overlap");
    u = u | p;
  }
  if (u.empty()) throw std::invalid_argument("k-partition: empty universe");
  const int w = omega_within(ambient, u).size;
  for (VertexSet p : parts)
    if (omega_within(ambient, p).size >= w)
      throw std::invalid_argument("k-partition: a part holds a largest clique");
}

std::optional<GoodPartition> find_good_partition_within(const Graph& g,
                                                        VertexSet universe,
                                                        int cap) {
  if (!universe.subset_of(g.vertices()))
    throw std::invalid_argument("find_good_partition: set outside graph");
  if (universe.empty())
    throw std::invalid_argument(
        "find_good_partition: empty graph has no good partition (omega 0 "
        "admits no strict drop)");
  if (universe.count() > cap)
    throw CapExceeded("find_good_partition", universe.count(), cap);

  if (perfect_within(g, universe))
    return GoodPartition{universe, VertexSet{}, g};

  const int w = omega_within(g, universe).size;
  const std::vector<int> verts = universe.elements();
  std::optional<GoodPartition> found;
  for (int size = 1; size < universe.count() && !found; ++size) {
    subsets_of_size(verts, size, 0, VertexSet{}, [&](VertexSet b) {
      if (omega_within(g, b).size >= w) return false;
      if (!perfect_within(g, universe - b)) return false;
      found = GoodPartition{universe - b, b, g};
      return true;
    });
  }
  if (found) found->validate();
  return found;
}

std::optional<GoodPartition> find_good_partition(const Graph& g, int cap) {
  return find_good_partition_within(g, g.vertices(), cap);
}

namespace {

detail::SubsetTables divisibility_tables(const Graph& g, const char* op,
                                         int cap) {
  if (g.size() > cap) throw CapExceeded(op, g.size(), cap);
  auto t = detail::SubsetTables::base(g);
  t.build_coloring();
  t.build_perfect();
  t.build_good_partition();
  return t;
}

// First subset failing `bad`, scanning sizes ascending, lexicographic within
// size; nullopt when none fails.
std::optional<VertexSet> first_failing(
    const Graph& g, const std::function<bool(std::uint32_t)>& bad) {
  const std::vector<int> verts = g.vertices().elements();
  for (int size = 2; size <= g.size(); ++size) {
    std::optional<VertexSet> hit;
    subsets_of_size(verts, size, 0, VertexSet{}, [&](VertexSet s) {
      if (!bad(static_cast<std::uint32_t>(s.bits))) return false;
      hit = s;
      return true;
    });
    if (hit) return hit;
  }
  return std::nullopt;
}

}  // namespace

DivisibilityVerdict is_perfectly_divisible(const Graph& g, int cap) {
  if (g.size() == 0) return {};  // vacuously divisible
  auto t = divisibility_tables(g, "is_perfectly_divisible", cap);
  auto failing = first_failing(g, [&](std::uint32_t s) {
    return t.has_edge[s] && !t.has_gp[s];
  });
  if (!failing) return {};
  return {false, failing};
}

DivisibilityVerdict is_k_divisible(const Graph& g, int k, int cap) {
  if (k < 1) throw std::invalid_argument("is_k_divisible: k must be >= 1");
  if (g.size() > cap) throw CapExceeded("is_k_divisible", g.size(), cap);
  if (g.size() == 0) return {};
  auto t = detail::SubsetTables::base(g);
  std::map<int, std::vector<std::uint8_t>> by_threshold;
  auto splits = [&](std::uint32_t s) -> bool {
    const int w = t.omega[s];
    auto it = by_threshold.find(w);
    if (it == by_threshold.end())
      it = by_threshold.emplace(w, t.k_partition_table(k, w)).first;
    return it->second[s] != 0;
  };
  auto failing = first_failing(g, [&](std::uint32_t s) {
    return t.has_edge[s] && !splits(s);
  });
  if (!failing) return {};
  return {false, failing};
}

std::optional<KPartition> find_k_partition(const Graph& g, int k, int cap) {
  if (k < 1) throw std::invalid_argument("find_k_partition: k must be >= 1");
  if (g.size() > cap) throw CapExceeded("find_k_partition", g.size(), cap);
  if (g.size() == 0) return std::nullopt;
  auto t = detail::SubsetTables::base(g);
  const int w = t.omega[t.full];

  // Peel parts greedily: each layer takes the lexicographically least part
  // containing the least remaining vertex that keeps the rest splittable.
  std::vector<std::vector<std::uint8_t>> ok;
  ok.push_back({});  // unused layer 0
  for (int j = 1; j <= k; ++j) ok.push_back(t.k_partition_table(j, w));
  if (!ok[static_cast<std::size_t>(k)][t.full]) return std::nullopt;

  KPartition out{{}, g};
  std::uint32_t rem = t.full;
  for (int j = k; j >= 1; --j) {
    if (j == 1) {
      out.parts.emplace_back(rem);
      rem = 0;
      break;
    }
    std::uint32_t chosen = 0;
    bool have = false;
    if (rem == 0) {
      have = true;
    } else {
      const std::uint32_t low = rem & (-rem);
      // smallest feasible part; empty or containing the least remaining
      // vertex (part labels are interchangeable)
      std::vector<int> verts = VertexSet(rem).elements();
      for (int size = 0; size <= static_cast<int>(verts.size()) && !have; ++size) {
        subsets_of_size(verts, size, 0, VertexSet{}, [&](VertexSet p) {
          const std::uint32_t pm = static_cast<std::uint32_t>(p.bits);
          if (pm != 0 && !(pm & low)) return false;
          if (t.omega[pm] >= w) return false;
          if (!ok[static_cast<std::size_t>(j - 1)][rem & ~pm]) return false;
          chosen = pm;
          have = true;
          return true;
        });
      }
    }
    if (!have) throw std::logic_error("find_k_partition: peel failed");
    out.parts.emplace_back(chosen);
    rem &= ~chosen;
  }
  if (rem != 0) throw std::logic_error("find_k_partition: leftover vertices");
  out.validate();
  return out;
}

bool is_mnpd(const Graph& g, int cap) {
  if (g.size() == 0) return false;
  auto t = divisibility_tables(g, "is_mnpd", cap);
  if (t.has_gp[t.full]) return false;
  for (std::uint32_t s = 0; s < t.full; ++s)
    if (t.has_edge[s] && !t.has_gp[s]) return false;
  return true;
}

bool is_minimally_non_2_divisible(const Graph& g, int cap) {
  if (g.size() > cap)
    throw CapExceeded("is_minimally_non_2_divisible", g.size(), cap);
  if (g.size() == 0) return false;
  auto t = detail::SubsetTables::base(g);
  std::map<int, std::vector<std::uint8_t>> by_threshold;
  auto splits = [&](std::uint32_t s) -> bool {
    const int w = t.omega[s];
    auto it = by_threshold.find(w);
    if (it == by_threshold.end())
      it = by_threshold.emplace(w, t.k_partition_table(2, w)).first;
    return it->second[s] != 0;
  };
  if (!t.has_edge[t.full] || splits(t.full)) return false;
  for (std::uint32_t s = 0; s < t.full; ++s)
    if (t.has_edge[s] && !splits(s)) return false;
  return true;
}

GoodPartition extend_partition_around_vertex(const Graph& g, int x,
                                             const GoodPartition& gp,
                                             ExtendMode mode) {
  if (x < 0 || x >= g.size())
    throw std::invalid_argument("extend_partition: vertex out of range");
  const VertexSet rest = g.vertices().without(x);
  if (gp.universe() != rest)
    throw std::invalid_argument(
        "extend_partition: input must partition V(g) minus the vertex");
  if (gp.ambient != g)
    throw std::invalid_argument("extend_partition: ambient graph mismatch");
  gp.validate();

  GoodPartition out{gp.a, gp.b, g};
  if (mode == ExtendMode::nonclique) {
    const int w = omega(g).size;
    if (1 + omega_within(g, g.neighbors(x)).size >= w)
      throw std::invalid_argument(
          "extend_partition: vertex lies in a maximum clique");
    out.b = out.b.with(x);
  } else {
    if (!is_clique(g, g.neighbors(x)))
      throw std::invalid_argument(
          "extend_partition: vertex is not simplicial");
    out.a = out.a.with(x);
  }
  out.validate();
  return out;
}

}  // namespace perfdiv
