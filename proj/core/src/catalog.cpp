#include "perfdiv/catalog.hpp"

#include <stdexcept>

namespace perfdiv {

namespace {

Graph make_path(int k) {
  GraphBuilder b(k, "path(" + std::to_string(k) + ")");
  for (int i = 0; i + 1 < k; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

Graph make_cycle(int k) {
  if (k < 3) throw std::invalid_argument("cycle(k) needs k >= 3");
  GraphBuilder b(k, "cycle(" + std::to_string(k) + ")");
  for (int i = 0; i < k; ++i) b.add_edge(i, (i + 1) % k);
  return std::move(b).build();
}

Graph make_complete(int k) {
  GraphBuilder b(k, "complete(" + std::to_string(k) + ")");
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) b.add_edge(i, j);
  return std::move(b).build();
}

// Complete bipartite with parts {0,1} and {2,3,4}.
Graph make_k23() {
  GraphBuilder b(5, "k23");
  for (int u = 0; u < 2; ++u)
    for (int v = 2; v < 5; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

// Triangle {0,1,2} with horns 3-0 and 4-1.
Graph make_bull() {
  return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}}, "bull");
}

// a=0, b=1, c=2, d1=3, d2=4 with edges ab, bc, cd1, cd2.
Graph make_fork() {
  return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}}, "fork");
}

// 4-cycle 0-1-2-3 with a pendant 4 attached at 0.
Graph make_banner() {
  return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}}, "banner");
}

// Diamond on {0,1,2,3} (missing edge 0-3) with a pendant 4 at the
// degree-three vertex 1.
Graph make_dart() {
  return Graph::from_edges(
      5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {1, 4}}, "dart");
}

// Ten vertices A..J numbered 0..9; thirteen edges AB, BC, CD, EA, EF, FA,
// FD, EG, EJ, FJ, GH, HI, IJ.
Graph make_figure1() {
  return Graph::from_edges(10,
                           {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 5}, {5, 0},
                            {5, 3}, {4, 6}, {4, 9}, {5, 9}, {6, 7}, {7, 8},
                            {8, 9}},
                           "figure1");
}

// Outer cycle 0..4, shadow vertices 5..9 (5+i adjacent to the cycle
// neighbours of i), apex 10 adjacent to every shadow vertex. 11 vertices,
// 20 edges, triangle-free, chromatic number 4.
Graph make_grotzsch() {
  GraphBuilder b(11, "grotzsch");
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(5 + i, (i + 4) % 5);
    b.add_edge(5 + i, (i + 1) % 5);
    b.add_edge(10, 5 + i);
  }
  return std::move(b).build();
}

// Outer cycle 0..4, spokes i-(5+i), inner pentagram 5+i adjacent to
// 5+((i+2) mod 5). 10 vertices, 15 edges.
Graph make_petersen() {
  GraphBuilder b(10, "petersen");
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, 5 + i);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return std::move(b).build();
}

}  // namespace

Graph named(const std::string& key) {
  if (key == "p5") return make_path(5).with_label("p5");
  if (key == "c5") return make_cycle(5).with_label("c5");
  if (key == "k23") return make_k23();
  if (key == "fourK1") return Graph::from_edges(4, {}, "fourK1");
  if (key == "bull") return make_bull();
  if (key == "fork") return make_fork();
  if (key == "banner") return make_banner();
  if (key == "dart") return make_dart();
  if (key == "figure1") return make_figure1();
  if (key == "grotzsch") return make_grotzsch();
  if (key == "petersen") return make_petersen();

  for (const auto& [prefix, fn] :
       {std::pair<const char*, Graph (*)(int)>{"complete(", &make_complete},
        {"path(", &make_path},
        {"cycle(", &make_cycle}}) {
    const std::string p = prefix;
    if (key.size() > p.size() + 1 && key.compare(0, p.size(), p) == 0 &&
        key.back() == ')') {
      const std::string arg = key.substr(p.size(), key.size() - p.size() - 1);
      std::size_t pos = 0;
      int k = 0;
      try {
        k = std::stoi(arg, &pos);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad catalog parameter in key '" + key + "'");
      }
      if (pos != arg.size() || k < 0 || k > kMaxVertices)
        throw std::invalid_argument("bad catalog parameter in key '" + key + "'");
      return fn(k);
    }
  }
  throw std::invalid_argument("unknown catalog key '" + key + "'");
}

const std::vector<std::string>& catalog_keys() {
  static const std::vector<std::string> keys = {
      "p5",   "c5",   "k23",     "fourK1",   "bull",     "fork",
      "banner", "dart", "figure1", "grotzsch", "petersen"};
  return keys;
}

}  // namespace perfdiv
