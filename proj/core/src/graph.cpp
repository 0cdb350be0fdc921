#include "perfdiv/graph.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace perfdiv {

int VertexSet::count() const { return std::popcount(bits); }

int VertexSet::least() const {
  return bits == 0 ? -1 : std::countr_zero(bits);
}

std::vector<int> VertexSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count()));
  for (std::uint64_t m = bits; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::uint64_t m = bits; m; m &= m - 1) {
    if (!first) os << ',';
    os << std::countr_zero(m);
    first = false;
  }
  os << '}';
  return os.str();
}

bool lex_less(VertexSet a, VertexSet b) {
  // Ascending vertex lists compare lexicographically; shared prefix cancels.
  while (a.bits && b.bits) {
    int va = std::countr_zero(a.bits);
    int vb = std::countr_zero(b.bits);
    if (va != vb) return va < vb;
    a.bits &= a.bits - 1;
    b.bits &= b.bits - 1;
  }
  return a.bits == 0 && b.bits != 0;
}

GraphBuilder::GraphBuilder(int n, std::string label)
    : n(n), label(std::move(label)) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("graph order must be within 0.." +
                                std::to_string(kMaxVertices) + ", got " +
                                std::to_string(n));
}

void GraphBuilder::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw std::invalid_argument("edge endpoint out of range: (" +
                                std::to_string(u) + "," + std::to_string(v) + ")");
  if (u == v)
    throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(u));
  adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

bool GraphBuilder::adjacent(int u, int v) const {
  return (adj[static_cast<std::size_t>(u)] >> v) & 1;
}

Graph GraphBuilder::build() && {
  Graph g;
  g.n_ = n;
  g.adj_ = adj;
  g.label_ = std::move(label);
  // Constructor invariants: symmetric, irreflexive.
  for (int v = 0; v < n; ++v) {
    if ((g.adj_[static_cast<std::size_t>(v)] >> v) & 1)
      throw std::logic_error("adjacency not irreflexive");
    for (std::uint64_t m = g.adj_[static_cast<std::size_t>(v)]; m; m &= m - 1) {
      int u = std::countr_zero(m);
      if (!((g.adj_[static_cast<std::size_t>(u)] >> v) & 1))
        throw std::logic_error("adjacency not symmetric");
    }
  }
  return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                        std::string label) {
  GraphBuilder b(n, std::move(label));
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v)
    twice += std::popcount(adj_[static_cast<std::size_t>(v)]);
  return twice / 2;
}

int Graph::degree(int v) const {
  return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (std::uint64_t m = adj_[static_cast<std::size_t>(u)] & ~((std::uint64_t{1} << (u + 1)) - 1);
         m; m &= m - 1)
      out.emplace_back(u, std::countr_zero(m));
  return out;
}

Graph Graph::with_label(std::string label) const {
  Graph g = *this;
  g.label_ = std::move(label);
  return g;
}

VertexSet InducedSubgraph::map_back(VertexSet local) const {
  VertexSet out;
  for (std::uint64_t m = local.bits; m; m &= m - 1)
    out.bits |= std::uint64_t{1} << vertex_map[static_cast<std::size_t>(std::countr_zero(m))];
  return out;
}

std::vector<int> InducedSubgraph::map_back(const std::vector<int>& local) const {
  std::vector<int> out;
  out.reserve(local.size());
  for (int v : local) out.push_back(vertex_map[static_cast<std::size_t>(v)]);
  return out;
}

InducedSubgraph induced(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices()))
    throw std::invalid_argument("induced: vertex set " + s.to_string() +
                                " not within graph of order " +
                                std::to_string(g.size()));
  InducedSubgraph out;
  out.vertex_map = s.elements();
  const int m = static_cast<int>(out.vertex_map.size());
  GraphBuilder b(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.adjacent(out.vertex_map[static_cast<std::size_t>(i)],
                     out.vertex_map[static_cast<std::size_t>(j)]))
        b.add_edge(i, j);
  out.graph = std::move(b).build();
  return out;
}

Graph complement(const Graph& g) {
  Graph c;
  c.n_ = g.n_;
  const std::uint64_t all = VertexSet::full(g.n_).bits;
  for (int v = 0; v < g.n_; ++v)
    c.adj_[static_cast<std::size_t>(v)] =
        all & ~g.adj_[static_cast<std::size_t>(v)] & ~(std::uint64_t{1} << v);
  return c;
}

bool is_clique(const Graph& g, VertexSet s) {
  for (std::uint64_t m = s.bits; m; m &= m - 1) {
    int v = std::countr_zero(m);
    if (!(s - VertexSet::single(v)).subset_of(g.neighbors(v))) return false;
  }
  return true;
}

bool is_stable_set(const Graph& g, VertexSet s) {
  for (std::uint64_t m = s.bits; m; m &= m - 1)
    if (g.neighbors(std::countr_zero(m)).intersects(s)) return false;
  return true;
}

}  // namespace perfdiv
