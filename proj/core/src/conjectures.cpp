#include "perfdiv/conjectures.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "perfdiv/catalog.hpp"
#include "perfdiv/graph6.hpp"
#include "perfdiv/hardness.hpp"
#include "perfdiv/invariants.hpp"
#include "perfdiv/patterns.hpp"
#include "perfdiv/perfection.hpp"

namespace perfdiv {

namespace {

using nlohmann::json;

json set_json(VertexSet s) { return json(s.elements()); }

json hole_json(const HoleCertificate& h) { return json(h.cycle); }

// Predicate helpers. Scans stay cheap-first: pattern freeness, alpha and
// hole checks run before divisibility decisions; MNPD runs last.
bool odd_hole_free(const Graph& g) {
  return !find_hole(g, Parity::odd, 5).has_value();
}
bool even_hole_free(const Graph& g) {
  return !find_hole(g, Parity::even, 4).has_value();
}

const Graph& pattern_p5() {
  static const Graph p = named("p5");
  return p;
}
const Graph& pattern_c5() {
  static const Graph p = named("c5");
  return p;
}
const Graph& pattern_k23() {
  static const Graph p = named("k23");
  return p;
}
const Graph& pattern_4k1() {
  static const Graph p = named("fourK1");
  return p;
}

json cutset_json(const Graph& g) {
  auto split = find_clique_cutset(g);
  json j;
  j["c"] = set_json(split->c);
  j["v1"] = set_json(split->v1);
  j["v2"] = set_json(split->v2);
  return j;
}

json pd_failure_json(const Graph& g, const DivisibilityVerdict& v) {
  json j;
  j["holds"] = v.holds;
  if (v.failing_subgraph) {
    j["failing_subgraph"] = set_json(*v.failing_subgraph);
    j["failing_graph6"] = write_graph6(induced(g, *v.failing_subgraph).graph);
  }
  return j;
}

ConjectureOutcome pd_conclusion(const Graph& g, int cap, bool hyp,
                                const char* hyp_name) {
  ConjectureOutcome out;
  out.hypothesis = hyp;
  if (!hyp) return out;
  const auto pd = is_perfectly_divisible(g, cap);
  out.conclusion = pd.holds;
  if (!pd.holds) {
    json certs;
    certs[hyp_name] = true;
    certs["perfectly_divisible"] = pd_failure_json(g, pd);
    out.certificates_json = certs.dump();
  }
  return out;
}

// Shared shape of C1.2 / T1.4 / T1.5: a counterexample is a (pattern-free)
// MNPD graph with a clique cutset. Cheap predicates run first; MNPD is
// evaluated only when everything else already lines up, so `hypothesis` may
// be short-circuited to false when no counterexample is possible.
ConjectureOutcome mnpd_no_cutset(const Graph& g, int cap, bool pattern_ok,
                                 const char* pattern_name) {
  ConjectureOutcome out;
  if (!pattern_ok) return out;
  if (!find_clique_cutset(g).has_value()) {
    out.conclusion = true;
    return out;
  }
  out.hypothesis = is_mnpd(g, cap);
  out.conclusion = false;  // a clique cutset exists
  if (out.counterexample()) {
    json certs;
    certs[pattern_name] = true;
    certs["mnpd"] = true;
    certs["clique_cutset"] = cutset_json(g);
    out.certificates_json = certs.dump();
  }
  return out;
}

std::vector<ConjectureSpec> build_registry() {
  std::vector<ConjectureSpec> r;

  r.push_back({"C1.2", ConjectureStatus::conjecture,
               "mnpd and has a clique cutset", "never (any hit is a counterexample)",
               [](const Graph& g, int cap) {
                 return mnpd_no_cutset(g, cap, true, "any");
               }});

  r.push_back({"T1.3", ConjectureStatus::theorem, "(p5, c5, k23)-free",
               "perfectly divisible", [](const Graph& g, int cap) {
                 const bool hyp =
                     is_l_free(g, {pattern_p5(), pattern_c5(), pattern_k23()})
                         .free;
                 return pd_conclusion(g, cap, hyp, "p5_c5_k23_free");
               }});

  r.push_back({"T1.4", ConjectureStatus::theorem, "p5-free and mnpd",
               "no clique cutset", [](const Graph& g, int cap) {
                 const bool p5free = is_l_free(g, {pattern_p5()}).free;
                 return mnpd_no_cutset(g, cap, p5free, "p5_free");
               }});

  r.push_back({"T1.5", ConjectureStatus::theorem, "4K1-free and mnpd",
               "no clique cutset", [](const Graph& g, int cap) {
                 const bool free4k1 = is_l_free(g, {pattern_4k1()}).free;
                 return mnpd_no_cutset(g, cap, free4k1, "fourK1_free");
               }});

  r.push_back({"L2.1", ConjectureStatus::theorem, "mnpd",
               "every vertex lies in a largest clique",
               [](const Graph& g, int cap) {
                 ConjectureOutcome out;
                 int stray = -1;
                 const int w = omega(g).size;
                 for (int v = 0; v < g.size() && stray < 0; ++v)
                   if (1 + omega_within(g, g.neighbors(v)).size < w) stray = v;
                 if (stray < 0) {
                   out.conclusion = true;
                   return out;
                 }
                 out.hypothesis = is_mnpd(g, cap);
                 out.conclusion = false;
                 if (out.counterexample()) {
                   json certs;
                   certs["mnpd"] = true;
                   certs["vertex_outside_largest_cliques"] = stray;
                   out.certificates_json = certs.dump();
                 }
                 return out;
               }});

  r.push_back({"L2.2", ConjectureStatus::theorem, "mnpd",
               "no simplicial vertex", [](const Graph& g, int cap) {
                 ConjectureOutcome out;
                 const auto simp = find_simplicial(g);
                 if (simp.empty()) {
                   out.conclusion = true;
                   return out;
                 }
                 out.hypothesis = is_mnpd(g, cap);
                 out.conclusion = false;
                 if (out.counterexample()) {
                   json certs;
                   certs["mnpd"] = true;
                   certs["simplicial"] = simp;
                   out.certificates_json = certs.dump();
                 }
                 return out;
               }});

  r.push_back({"C4.1", ConjectureStatus::conjecture, "odd-hole-free",
               "perfectly divisible", [](const Graph& g, int cap) {
                 return pd_conclusion(g, cap, odd_hole_free(g),
                                      "odd_hole_free");
               }});

  r.push_back({"C4.2", ConjectureStatus::conjecture, "p5-free",
               "perfectly divisible", [](const Graph& g, int cap) {
                 return pd_conclusion(g, cap,
                                      is_l_free(g, {pattern_p5()}).free,
                                      "p5_free");
               }});

  r.push_back({"C4.3", ConjectureStatus::conjecture, "alpha <= 3",
               "perfectly divisible", [](const Graph& g, int cap) {
                 return pd_conclusion(g, cap, alpha(g).size <= 3,
                                      "alpha_le_3");
               }});

  r.push_back({"C4.4", ConjectureStatus::conjecture, "even-hole-free",
               "perfectly divisible", [](const Graph& g, int cap) {
                 return pd_conclusion(g, cap, even_hole_free(g),
                                      "even_hole_free");
               }});

  r.push_back({"C4.5", ConjectureStatus::conjecture, "mnpd",
               "no bisimplicial vertex", [](const Graph& g, int cap) {
                 ConjectureOutcome out;
                 const auto bis = find_bisimplicial(g);
                 if (bis.empty()) {
                   out.conclusion = true;
                   return out;
                 }
                 out.hypothesis = is_mnpd(g, cap);
                 out.conclusion = false;
                 if (out.counterexample()) {
                   json certs;
                   certs["mnpd"] = true;
                   certs["bisimplicial"] = bis;
                   out.certificates_json = certs.dump();
                 }
                 return out;
               }});

  r.push_back({"C4.6", ConjectureStatus::conjecture, "always (biconditional)",
               "2-divisible iff odd-hole-free", [](const Graph& g, int cap) {
                 ConjectureOutcome out;
                 out.hypothesis = true;
                 const bool ohf = odd_hole_free(g);
                 const auto div2 = is_k_divisible(g, 2, cap);
                 out.conclusion = (ohf == div2.holds);
                 if (out.counterexample()) {
                   json certs;
                   certs["odd_hole_free"] = ohf;
                   if (auto hole = find_hole(g, Parity::odd, 5))
                     certs["odd_hole"] = hole_json(*hole);
                   certs["two_divisible"] = pd_failure_json(g, div2);
                   out.certificates_json = certs.dump();
                 }
                 return out;
               }});

  r.push_back({"C4.7", ConjectureStatus::conjecture,
               "minimally non-2-divisible", "no clique cutset",
               [](const Graph& g, int cap) {
                 ConjectureOutcome out;
                 if (!find_clique_cutset(g).has_value()) {
                   out.conclusion = true;
                   return out;
                 }
                 out.hypothesis = is_minimally_non_2_divisible(g, cap);
                 out.conclusion = false;
                 if (out.counterexample()) {
                   json certs;
                   certs["minimally_non_2_divisible"] = true;
                   certs["clique_cutset"] = cutset_json(g);
                   out.certificates_json = certs.dump();
                 }
                 return out;
               }});

  r.push_back({"C4.8", ConjectureStatus::conjecture, "even-hole-free",
               "3-divisible", [](const Graph& g, int cap) {
                 ConjectureOutcome out;
                 out.hypothesis = even_hole_free(g);
                 if (!out.hypothesis) return out;
                 const auto div3 = is_k_divisible(g, 3, cap);
                 out.conclusion = div3.holds;
                 if (!div3.holds) {
                   json certs;
                   certs["even_hole_free"] = true;
                   certs["three_divisible"] = pd_failure_json(g, div3);
                   out.certificates_json = certs.dump();
                 }
                 return out;
               }});

  return r;
}

}  // namespace

const std::vector<ConjectureSpec>& registry() {
  static const std::vector<ConjectureSpec> r = build_registry();
  return r;
}

const ConjectureSpec* find_conjecture(const std::string& id) {
  for (const auto& spec : registry())
    if (spec.id == id) return &spec;
  return nullptr;
}

namespace {

struct ScanSlice {
  std::uint64_t scanned = 0, skipped = 0, parse_errors = 0;
  std::vector<Counterexample> hits;
};

void scan_one(const Graph& g, const ConjectureSpec& spec, int cap,
              ScanSlice& slice) {
  if (g.size() > cap) {
    ++slice.skipped;
    return;
  }
  ++slice.scanned;
  const auto outcome = spec.evaluate(g, cap);
  if (outcome.counterexample())
    slice.hits.push_back({write_graph6(g), outcome.certificates_json});
}

ScanReport run_scan(const std::vector<Graph>* graphs,
                    const std::vector<std::string>* lines,
                    const ConjectureSpec& spec, const ScanLimits& limits,
                    const std::string& params) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t total = graphs ? graphs->size() : lines->size();
  const int jobs = std::max(1, limits.jobs);

  std::vector<ScanSlice> slices(static_cast<std::size_t>(jobs));
  auto worker = [&](int w) {
    ScanSlice& slice = slices[static_cast<std::size_t>(w)];
    for (std::size_t i = static_cast<std::size_t>(w); i < total;
         i += static_cast<std::size_t>(jobs)) {
      if (graphs) {
        scan_one((*graphs)[i], spec, limits.cap, slice);
      } else {
        Graph g;
        try {
          g = parse_graph6((*lines)[i]);
        } catch (const ParseError&) {
          ++slice.parse_errors;
          continue;
        }
        scan_one(g, spec, limits.cap, slice);
      }
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
    for (auto& th : pool) th.join();
  }

  ScanReport report;
  report.conjecture_id = spec.id;
  report.status = spec.status;
  report.params = params;
  for (auto& slice : slices) {
    report.scanned += slice.scanned;
    report.skipped += slice.skipped;
    report.parse_errors += slice.parse_errors;
    for (auto& hit : slice.hits) report.counterexamples.push_back(std::move(hit));
  }
  std::sort(report.counterexamples.begin(), report.counterexamples.end(),
            [](const Counterexample& a, const Counterexample& b) {
              return a.graph6 < b.graph6;
            });

  // No in-memory-only evidence: every hit must re-validate from its line.
  for (const auto& hit : report.counterexamples) {
    const Graph g = parse_graph6(hit.graph6);
    if (!spec.evaluate(g, limits.cap).counterexample())
      throw std::logic_error("scan: counterexample failed re-validation from "
                             "graph6 " + hit.graph6);
  }

  report.duration_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - t0)
          .count());
  return report;
}

}  // namespace

ScanReport scan(const std::vector<std::string>& graph6_lines,
                const ConjectureSpec& spec, const ScanLimits& limits) {
  return run_scan(nullptr, &graph6_lines, spec, limits,
                  "lines=" + std::to_string(graph6_lines.size()));
}

ScanReport scan_graphs(const std::vector<Graph>& corpus,
                       const ConjectureSpec& spec, const ScanLimits& limits,
                       const std::string& params) {
  return run_scan(&corpus, nullptr, spec, limits,
                  params.empty() ? "graphs=" + std::to_string(corpus.size())
                                 : params);
}

std::string ScanReport::to_json(bool include_timings) const {
  json j;
  j["conjecture_id"] = conjecture_id;
  j["status"] = status == ConjectureStatus::theorem ? "theorem" : "conjecture";
  j["scanned"] = scanned;
  j["skipped"] = skipped;
  j["parse_errors"] = parse_errors;
  j["params"] = params;
  j["counterexamples"] = json::array();
  for (const auto& c : counterexamples) {
    json e;
    e["graph6"] = c.graph6;
    e["certificates"] = c.certificates_json.empty()
                            ? json(nullptr)
                            : json::parse(c.certificates_json);
    j["counterexamples"].push_back(e);
  }
  if (include_timings) j["duration_ms"] = duration_ms;
  return j.dump(2);
}

std::string ScanReport::to_text(bool include_timings) const {
  std::string out;
  out += "conjecture " + conjecture_id + " (" +
         (status == ConjectureStatus::theorem ? "theorem" : "conjecture") +
         ")\n";
  out += "  scanned " + std::to_string(scanned) + ", skipped " +
         std::to_string(skipped) + ", parse errors " +
         std::to_string(parse_errors) + "\n";
  out += "  counterexamples: " + std::to_string(counterexamples.size()) + "\n";
  for (const auto& c : counterexamples)
    out += "    " + c.graph6 + "  " + c.certificates_json + "\n";
  if (include_timings)
    out += "  duration_ms: " + std::to_string(duration_ms) + "\n";
  return out;
}

namespace {

// All n! vertex orders for n <= 8, cached per n.
const std::vector<std::vector<int>>& permutations(int n) {
  static std::vector<std::vector<std::vector<int>>> cache(9);
  auto& perms = cache[static_cast<std::size_t>(n)];
  if (perms.empty()) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return perms;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.size();
  if (n > 8) throw std::invalid_argument("canonical_code: needs n <= 8");
  if (n < 2) return 0;
  const int nbits = n * (n - 1) / 2;
  std::uint64_t best = ~std::uint64_t{0};
  for (const auto& p : permutations(n)) {
    std::uint64_t code = 0;
    int t = 0;
    bool alive = true;
    for (int i = 0; i < n && alive; ++i) {
      for (int j = i + 1; j < n; ++j) {
        code = (code << 1) |
               static_cast<std::uint64_t>(g.adjacent(
                   p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]));
        ++t;
        if (code > (best >> (nbits - t))) {  // prefix already beaten
          alive = false;
          break;
        }
      }
    }
    if (alive && code < best) best = code;
  }
  return best;
}

std::vector<Graph> enumerate_small(int n) {
  if (n < 0 || n > 7)
    throw std::invalid_argument(
        "enumerate_small: exhaustive mode is limited to n <= 7 (use external "
        "graph6 corpora beyond that)");
  std::vector<Graph> reps = {Graph::from_edges(0, {})};
  for (int m = 1; m <= n; ++m) {
    std::vector<Graph> next;
    std::set<std::uint64_t> seen;
    for (const Graph& base : reps) {
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (m - 1));
           ++mask) {
        GraphBuilder b(m);
        for (auto [u, v] : base.edges()) b.add_edge(u, v);
        for (std::uint32_t bits = mask; bits; bits &= bits - 1)
          b.add_edge(std::countr_zero(bits), m - 1);
        Graph g = std::move(b).build();
        if (seen.insert(canonical_code(g)).second) next.push_back(std::move(g));
      }
    }
    std::sort(next.begin(), next.end(), [](const Graph& a, const Graph& b) {
      return canonical_code(a) < canonical_code(b);
    });
    reps = std::move(next);
  }
  return reps;
}

namespace {

double next_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("random_graph: bad order");
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("random_graph: p outside [0,1]");
  std::mt19937_64 rng(seed);
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (next_uniform(rng) < p) b.add_edge(i, j);
  return std::move(b).build();
}

GluedGraph random_glued(int n1, int n2, int csize, double p,
                        std::uint64_t seed) {
  if (csize < 1) throw std::invalid_argument("random_glued: csize must be >= 1");
  if (n1 < 1 || n2 < 1)
    throw std::invalid_argument("random_glued: both sides need a vertex");
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("random_glued: p outside [0,1]");
  const int n = csize + n1 + n2;
  if (n > kMaxVertices) throw std::invalid_argument("random_glued: too large");

  // Vertices: cutset 0..csize-1, side one next n1, side two the rest.
  std::mt19937_64 rng(seed);
  GraphBuilder b(n, "glued(" + std::to_string(n1) + "," + std::to_string(n2) +
                        "," + std::to_string(csize) + ")");
  for (int i = 0; i < csize; ++i)
    for (int j = i + 1; j < csize; ++j) b.add_edge(i, j);
  // side one spans [0, csize+n1), side two [0,csize) plus [csize+n1, n)
  for (int i = 0; i < csize + n1; ++i)
    for (int j = i + 1; j < csize + n1; ++j)
      if (j >= csize && next_uniform(rng) < p) b.add_edge(i, j);
  for (int i = 0; i < n; ++i) {
    if (i >= csize && i < csize + n1) continue;
    for (int j = std::max(i + 1, csize + n1); j < n; ++j)
      if (next_uniform(rng) < p) b.add_edge(i, j);
  }

  GluedGraph out{std::move(b).build(), {}};
  VertexSet c = VertexSet::full(csize);
  out.split = CutsetSplit{c, VertexSet{}, VertexSet{}, out.graph};
  for (int v = csize; v < csize + n1; ++v) out.split.v1 = out.split.v1.with(v);
  for (int v = csize + n1; v < n; ++v) out.split.v2 = out.split.v2.with(v);
  out.split.validate();
  return out;
}

}  // namespace perfdiv
