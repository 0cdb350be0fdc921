#include "perfdiv/invariants.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace perfdiv {

namespace {

// Branch and bound over bitset candidate sets, popcount bound.
void expand_clique(const Graph& g, std::uint64_t cand, int size, int& best) {
  if (size > best) best = size;
  while (cand) {
    if (size + std::popcount(cand) <= best) return;
    const int v = std::countr_zero(cand);
    cand &= cand - 1;
    expand_clique(g, cand & g.neighbors(v).bits, size + 1, best);
  }
}

int max_clique_size(const Graph& g, std::uint64_t cand) {
  int best = 0;
  expand_clique(g, cand, 0, best);
  return best;
}

}  // namespace

CliqueResult omega_within(const Graph& g, VertexSet allowed) {
  if (!allowed.subset_of(g.vertices()))
    throw std::invalid_argument("omega_within: set outside graph");
  const int best = max_clique_size(g, allowed.bits);

  // Lexicographically least witness: greedily take the smallest vertex that
  // still extends to a clique of the target size.
  CliqueResult r;
  r.size = best;
  std::uint64_t cand = allowed.bits;
  while (r.witness.count() < best) {
    std::uint64_t probe = cand;
    bool took = false;
    while (probe) {
      const int v = std::countr_zero(probe);
      probe &= probe - 1;
      const std::uint64_t rest = cand & g.neighbors(v).bits;
      if (1 + max_clique_size(g, rest) >= best - r.witness.count()) {
        r.witness = r.witness.with(v);
        cand = rest;
        took = true;
        break;
      }
    }
    if (!took) throw std::logic_error("omega: witness reconstruction failed");
  }
  if (!is_clique(g, r.witness) || r.witness.count() != best)
    throw std::logic_error("omega: witness failed self-check");
  return r;
}

CliqueResult omega(const Graph& g) { return omega_within(g, g.vertices()); }

CliqueResult alpha(const Graph& g) { return omega(complement(g)); }

bool Coloring::proper_for(const Graph& g) const {
  if (static_cast<int>(assignment.size()) != g.size()) return false;
  for (int v = 0; v < g.size(); ++v) {
    if (assignment[static_cast<std::size_t>(v)] < 0 ||
        assignment[static_cast<std::size_t>(v)] >= k)
      return false;
    for (std::uint64_t m = g.neighbors(v).bits; m; m &= m - 1)
      if (assignment[static_cast<std::size_t>(std::countr_zero(m))] ==
          assignment[static_cast<std::size_t>(v)])
        return false;
  }
  return true;
}

namespace {

bool color_rec(const Graph& g, int k, int v, int used,
               std::vector<int>& assign) {
  if (v == g.size()) return true;
  // A fresh color index beyond used+1 only relabels an earlier solution, so
  // the first assignment found is the lexicographically least one.
  const int limit = std::min(k - 1, used);
  for (int c = 0; c <= limit; ++c) {
    bool ok = true;
    for (std::uint64_t m = g.neighbors(v).bits & ((std::uint64_t{1} << v) - 1);
         m; m &= m - 1)
      if (assign[static_cast<std::size_t>(std::countr_zero(m))] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    assign[static_cast<std::size_t>(v)] = c;
    if (color_rec(g, k, v + 1, std::max(used, c + 1), assign)) return true;
  }
  assign[static_cast<std::size_t>(v)] = -1;
  return false;
}

}  // namespace

std::optional<Coloring> is_k_colorable(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("is_k_colorable: negative k");
  if (g.size() == 0) return Coloring{{}, 0};
  if (k == 0) return std::nullopt;
  std::vector<int> assign(static_cast<std::size_t>(g.size()), -1);
  if (!color_rec(g, k, 0, 0, assign)) return std::nullopt;
  Coloring col;
  col.assignment = std::move(assign);
  col.k = *std::max_element(col.assignment.begin(), col.assignment.end()) + 1;
  if (!col.proper_for(g)) throw std::logic_error("coloring failed self-check");
  return col;
}

ChromaticResult chi(const Graph& g, int cap) {
  if (g.size() > cap) throw CapExceeded("chi", g.size(), cap);
  for (int k = omega(g).size; k <= std::max(g.size(), 0); ++k)
    if (auto col = is_k_colorable(g, k)) return {k, std::move(*col)};
  // Unreachable: n colors always suffice.
  throw std::logic_error("chi: no coloring found");
}

namespace {

void bron_kerbosch(const Graph& g, std::uint64_t r, std::uint64_t p,
                   std::uint64_t x, std::vector<VertexSet>& out) {
  if (p == 0 && x == 0) {
    out.push_back(VertexSet(r));
    return;
  }
  // Pivot with the most candidates; ties to the lowest index.
  int pivot = -1, gain = -1;
  for (std::uint64_t m = p | x; m; m &= m - 1) {
    const int u = std::countr_zero(m);
    const int deg = std::popcount(p & g.neighbors(u).bits);
    if (deg > gain) {
      gain = deg;
      pivot = u;
    }
  }
  std::uint64_t ext = p & ~g.neighbors(pivot).bits;
  while (ext) {
    const int v = std::countr_zero(ext);
    ext &= ext - 1;
    const std::uint64_t nv = g.neighbors(v).bits;
    bron_kerbosch(g, r | (std::uint64_t{1} << v), p & nv, x & nv, out);
    p &= ~(std::uint64_t{1} << v);
    x |= std::uint64_t{1} << v;
  }
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  bron_kerbosch(g, 0, g.vertices().bits, 0, out);
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return lex_less(a, b); });
  for (VertexSet c : out)
    if (!is_clique(g, c)) throw std::logic_error("maximal clique failed self-check");
  return out;
}

namespace {

// Returns true when the visitor asked to stop.
bool cliques_of_size(const Graph& g, VertexSet prefix, std::uint64_t common,
                     int need, const std::function<bool(VertexSet)>& visit) {
  if (need == 0) return visit(prefix);
  while (common) {
    const int v = std::countr_zero(common);
    common &= common - 1;
    if (cliques_of_size(g, prefix.with(v), common & g.neighbors(v).bits,
                        need - 1, visit))
      return true;
  }
  return false;
}

}  // namespace

void for_each_clique(const Graph& g,
                     const std::function<bool(VertexSet)>& visit) {
  for (int s = 0; s <= g.size(); ++s)
    if (cliques_of_size(g, VertexSet{}, g.vertices().bits, s, visit)) return;
}

std::vector<VertexSet> components_within(const Graph& g, VertexSet allowed) {
  if (!allowed.subset_of(g.vertices()))
    throw std::invalid_argument("components_within: set outside graph");
  std::vector<VertexSet> out;
  std::uint64_t rem = allowed.bits;
  while (rem) {
    std::uint64_t comp = rem & (-rem);  // least remaining vertex
    for (;;) {
      std::uint64_t grown = comp;
      for (std::uint64_t m = comp; m; m &= m - 1)
        grown |= g.neighbors(std::countr_zero(m)).bits & rem;
      if (grown == comp) break;
      comp = grown;
    }
    out.push_back(VertexSet(comp));
    rem &= ~comp;
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  return components_within(g, g.vertices());
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

}  // namespace perfdiv
