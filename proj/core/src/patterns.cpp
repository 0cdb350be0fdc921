#include "perfdiv/patterns.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace perfdiv {

bool Embedding::valid_for(const Graph& host, const Graph& pattern) const {
  if (static_cast<int>(map.size()) != pattern.size()) return false;
  VertexSet used;
  for (int v : map) {
    if (v < 0 || v >= host.size() || used.contains(v)) return false;
    used = used.with(v);
  }
  for (int i = 0; i < pattern.size(); ++i)
    for (int j = i + 1; j < pattern.size(); ++j)
      if (pattern.adjacent(i, j) !=
          host.adjacent(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(j)]))
        return false;
  return true;
}

VertexSet Embedding::image() const {
  VertexSet s;
  for (int v : map) s = s.with(v);
  return s;
}

namespace {

struct EmbedSearch {
  const Graph& host;
  const Graph& pattern;
  std::vector<int> order;   // pattern vertices, descending degree
  std::vector<int> image;   // order index -> host vertex
  std::uint64_t used = 0;

  bool match(std::size_t pos) {
    if (pos == order.size()) return true;
    const int pv = order[pos];
    std::uint64_t cand = host.vertices().bits & ~used;
    for (std::size_t q = 0; q < pos; ++q) {
      const int qv = order[q];
      const std::uint64_t nb = host.neighbors(image[q]).bits;
      cand &= pattern.adjacent(pv, qv) ? nb : ~nb;
    }
    while (cand) {
      const int hv = std::countr_zero(cand);
      cand &= cand - 1;
      if (host.degree(hv) < pattern.degree(pv)) continue;
      image[pos] = hv;
      used |= std::uint64_t{1} << hv;
      if (match(pos + 1)) return true;
      used &= ~(std::uint64_t{1} << hv);
    }
    return false;
  }
};

}  // namespace

std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern) {
  if (pattern.size() > host.size()) return std::nullopt;
  EmbedSearch s{host, pattern, {}, {}, 0};
  s.order.resize(static_cast<std::size_t>(pattern.size()));
  std::iota(s.order.begin(), s.order.end(), 0);
  std::stable_sort(s.order.begin(), s.order.end(), [&](int a, int b) {
    return pattern.degree(a) > pattern.degree(b);
  });
  s.image.assign(s.order.size(), -1);
  if (!s.match(0)) return std::nullopt;
  Embedding e;
  e.map.assign(static_cast<std::size_t>(pattern.size()), -1);
  for (std::size_t q = 0; q < s.order.size(); ++q)
    e.map[static_cast<std::size_t>(s.order[q])] = s.image[q];
  if (!e.valid_for(host, pattern))
    throw std::logic_error("embedding failed self-check");
  return e;
}

FreenessResult is_l_free(const Graph& g, const std::vector<Graph>& patterns) {
  for (std::size_t i = 0; i < patterns.size(); ++i)
    if (auto e = find_induced(g, patterns[i]))
      return FreenessResult{false, i, std::move(e)};
  return FreenessResult{};
}

bool HoleCertificate::valid_for(const Graph& g) const {
  const int len = length();
  if (len < 4) return false;
  VertexSet seen;
  for (int v : cycle) {
    if (v < 0 || v >= g.size() || seen.contains(v)) return false;
    seen = seen.with(v);
  }
  for (int i = 0; i < len; ++i)
    for (int j = i + 1; j < len; ++j) {
      const bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
      if (g.adjacent(cycle[static_cast<std::size_t>(i)], cycle[static_cast<std::size_t>(j)]) != consecutive)
        return false;
    }
  return true;
}

namespace {

// Extends a chordless path anchored at its least vertex into a cycle of
// exactly the target length. path holds v0..v_{i-1}; every vertex is above
// the anchor; direction is canonicalized by path[1] < closing vertex.
bool extend_cycle(const Graph& g, int target, std::vector<int>& path,
                  std::uint64_t pathmask) {
  const int i = static_cast<int>(path.size());
  const int anchor = path[0];
  const std::uint64_t above_anchor =
      ~((std::uint64_t{2} << anchor) - 1);  // vertices > anchor
  std::uint64_t cand =
      g.neighbors(path[static_cast<std::size_t>(i - 1)]).bits & ~pathmask & above_anchor;
  if (i < target - 1) {
    for (int j = 0; j <= i - 2; ++j)
      cand &= ~g.neighbors(path[static_cast<std::size_t>(j)]).bits;
    while (cand) {
      const int v = std::countr_zero(cand);
      cand &= cand - 1;
      path.push_back(v);
      if (extend_cycle(g, target, path, pathmask | (std::uint64_t{1} << v)))
        return true;
      path.pop_back();
    }
    return false;
  }
  // Closing vertex: adjacent to the anchor, no chords to the interior, and
  // above path[1] so each cycle is traversed in one direction only.
  cand &= g.neighbors(anchor).bits;
  for (int j = 1; j <= i - 2; ++j)
    cand &= ~g.neighbors(path[static_cast<std::size_t>(j)]).bits;
  cand &= ~((std::uint64_t{2} << path[1]) - 1);
  if (cand) {
    path.push_back(std::countr_zero(cand));
    return true;
  }
  return false;
}

std::optional<HoleCertificate> cycle_of_length(const Graph& g, int target) {
  if (target > g.size()) return std::nullopt;
  for (int a = 0; a + target <= g.size() + 0 && a < g.size(); ++a) {
    std::vector<int> path{a};
    if (extend_cycle(g, target, path, std::uint64_t{1} << a)) {
      HoleCertificate cert{std::move(path)};
      if (!cert.valid_for(g)) throw std::logic_error("hole failed self-check");
      return cert;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<HoleCertificate> find_hole(const Graph& g, Parity parity,
                                         int min_len) {
  if (min_len < 4) throw std::invalid_argument("find_hole: min_len must be >= 4");
  for (int len = min_len; len <= g.size(); ++len) {
    if (parity == Parity::odd && len % 2 == 0) continue;
    if (parity == Parity::even && len % 2 == 1) continue;
    if (auto cert = cycle_of_length(g, len)) return cert;
  }
  return std::nullopt;
}

std::optional<HoleCertificate> find_odd_antihole(const Graph& g, int min_len) {
  return find_hole(complement(g), Parity::odd, std::max(min_len, 4));
}

}  // namespace perfdiv
