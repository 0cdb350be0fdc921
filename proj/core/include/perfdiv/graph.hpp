#ifndef PERFDIV_GRAPH_HPP
#define PERFDIV_GRAPH_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "perfdiv/errors.hpp"

namespace perfdiv {

/// Subset of the vertices {0..61} of an ambient graph, bitmask semantics.
struct VertexSet {
  std::uint64_t bits = 0;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t b) : bits(b) {}
  VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) bits |= std::uint64_t{1} << v;
  }

  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) {
    return VertexSet(std::uint64_t{1} << v);
  }

  bool contains(int v) const { return (bits >> v) & 1; }
  int count() const;
  bool empty() const { return bits == 0; }
  int least() const;  // -1 when empty

  VertexSet with(int v) const { return VertexSet(bits | std::uint64_t{1} << v); }
  VertexSet without(int v) const { return VertexSet(bits & ~(std::uint64_t{1} << v)); }
  VertexSet complement_within(VertexSet universe) const {
    return VertexSet(universe.bits & ~bits);
  }
  bool subset_of(VertexSet other) const { return (bits & ~other.bits) == 0; }
  bool intersects(VertexSet other) const { return (bits & other.bits) != 0; }

  std::vector<int> elements() const;
  std::string to_string() const;  // "{0,4,5}"

  friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits | b.bits); }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits & b.bits); }
  friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits & ~b.bits); }
  friend bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
  friend bool operator!=(VertexSet a, VertexSet b) { return a.bits != b.bits; }
};

/// Compares vertex sets as ascending vertex lists, lexicographically.
bool lex_less(VertexSet a, VertexSet b);

/// Immutable simple graph on at most 62 vertices, one adjacency bitmask row
/// per vertex. Vertices are 0..n-1 with no gaps; adjacency is symmetric and
/// irreflexive by construction.
class Graph {
public:
  Graph() = default;

  /// Builds a graph from an explicit edge list. Throws std::invalid_argument
  /// on out-of-range endpoints, self-loops or n outside 0..62.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                          std::string label = {});

  int size() const { return n_; }
  int edge_count() const;
  bool adjacent(int u, int v) const {
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1;
  }
  VertexSet neighbors(int v) const {
    return VertexSet(adj_[static_cast<std::size_t>(v)]);
  }
  int degree(int v) const;
  VertexSet vertices() const { return VertexSet::full(n_); }
  std::vector<std::pair<int, int>> edges() const;

  const std::string& label() const { return label_; }
  Graph with_label(std::string label) const;

  /// Equality is structural (order, adjacency); labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    for (int v = 0; v < a.n_; ++v)
      if (a.adj_[static_cast<std::size_t>(v)] != b.adj_[static_cast<std::size_t>(v)]) return false;
    return true;
  }
  friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
  std::string label_;

  friend Graph complement(const Graph&);
  friend struct InducedSubgraph;
  friend struct GraphBuilder;
};

/// Mutable construction helper for internal producers (catalog, graph6,
/// generators). Validates the symmetry/irreflexivity invariants on build.
struct GraphBuilder {
  explicit GraphBuilder(int n, std::string label = {});
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const;
  Graph build() &&;

  int n;
  std::array<std::uint64_t, kMaxVertices> adj{};
  std::string label;
};

/// Result of taking an induced subgraph: the subgraph plus the
/// order-preserving map from its vertices back to the host's.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> vertex_map;  // new index -> host vertex, ascending

  VertexSet map_back(VertexSet local) const;
  std::vector<int> map_back(const std::vector<int>& local) const;
};

/// G[s] together with the order-preserving vertex map. Throws if s contains
/// vertices outside g.
InducedSubgraph induced(const Graph& g, VertexSet s);

Graph complement(const Graph& g);

bool is_clique(const Graph& g, VertexSet s);
bool is_stable_set(const Graph& g, VertexSet s);

}  // namespace perfdiv

#endif
