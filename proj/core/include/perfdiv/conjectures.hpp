#ifndef PERFDIV_CONJECTURES_HPP
#define PERFDIV_CONJECTURES_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "perfdiv/decomposition.hpp"
#include "perfdiv/graph.hpp"

namespace perfdiv {

enum class ConjectureStatus { theorem, conjecture };

struct ConjectureOutcome {
  bool hypothesis = false;
  bool conclusion = true;
  std::string certificates_json;  // filled for counterexamples

  // Cheap predicates run first and expensive ones are skipped once no
  // counterexample is possible, so the two flags may be short-circuited;
  // counterexample() is the contract.
  bool counterexample() const { return hypothesis && !conclusion; }
};

/// A registered hypothesis => conclusion statement. Theorem-status entries
/// are must-hold invariants (a hit breaks the build); conjecture-status
/// entries are reportable discoveries. evaluate() orders predicates cheap
/// first and skips the conclusion when the hypothesis fails.
struct ConjectureSpec {
  std::string id;
  ConjectureStatus status = ConjectureStatus::conjecture;
  std::string hypothesis;
  std::string conclusion;
  std::function<ConjectureOutcome(const Graph&, int cap)> evaluate;
};

/// The fixed 14-entry registry: C1.2, T1.3, T1.4, T1.5, L2.1, L2.2 and
/// C4.1 .. C4.8.
const std::vector<ConjectureSpec>& registry();

/// Registry lookup by id; null when unknown.
const ConjectureSpec* find_conjecture(const std::string& id);

struct Counterexample {
  std::string graph6;
  std::string certificates_json;
};

struct ScanLimits {
  int cap = kDecisionCap;
  int jobs = 1;
};

struct ScanReport {
  std::string conjecture_id;
  ConjectureStatus status = ConjectureStatus::conjecture;
  std::uint64_t scanned = 0;
  std::uint64_t skipped = 0;       // over-cap graphs
  std::uint64_t parse_errors = 0;  // unreadable corpus lines
  std::vector<Counterexample> counterexamples;  // sorted by graph6 string
  std::uint64_t duration_ms = 0;
  std::string params;

  std::string to_json(bool include_timings = false) const;
  std::string to_text(bool include_timings = false) const;
};

/// Scans graph6 lines; per-line parse failures are counted and the scan
/// continues. Counterexamples re-validate from their serialized form before
/// the report is returned, and the report is canonical regardless of jobs.
ScanReport scan(const std::vector<std::string>& graph6_lines,
                const ConjectureSpec& spec, const ScanLimits& limits = {});

/// Same harness over in-memory graphs (no parse step).
ScanReport scan_graphs(const std::vector<Graph>& corpus,
                       const ConjectureSpec& spec,
                       const ScanLimits& limits = {},
                       const std::string& params = {});

/// All non-isomorphic graphs on exactly n vertices (n <= 7), deduplicated by
/// the minimum adjacency bitstring over all vertex permutations. Counts
/// match 1, 1, 2, 4, 11, 34, 156, 1044 for n = 0..7.
std::vector<Graph> enumerate_small(int n);

/// Minimum adjacency bitstring over all n! vertex orders (n <= 8); equal
/// codes mean isomorphic graphs.
std::uint64_t canonical_code(const Graph& g);

/// Erdos-Renyi graph with a platform-independent generator (mt19937_64 with
/// fixed bit-to-uniform mapping); deterministic per (n, p, seed).
Graph random_graph(int n, double p, std::uint64_t seed);

struct GluedGraph {
  Graph graph;
  CutsetSplit split;
};

/// Two random sides of n1 and n2 vertices glued on a shared clique of csize
/// vertices, no edges across. Deterministic per seed; the returned split is
/// validated.
GluedGraph random_glued(int n1, int n2, int csize, double p,
                        std::uint64_t seed);

}  // namespace perfdiv

#endif
