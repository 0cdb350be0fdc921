// perfdiv command line: per-graph analysis, conjecture corpus scanning,
// built-in verification battery and fixture generation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "perfdiv/catalog.hpp"
#include "perfdiv/conjectures.hpp"
#include "perfdiv/decomposition.hpp"
#include "perfdiv/graph6.hpp"
#include "perfdiv/hardness.hpp"
#include "perfdiv/invariants.hpp"
#include "perfdiv/perfection.hpp"
#include "perfdiv/verify.hpp"

namespace {

using nlohmann::json;
using namespace perfdiv;

constexpr int kExitOk = 0;
constexpr int kExitTheoremViolated = 1;
constexpr int kExitInputError = 2;
constexpr int kExitDiscovery = 3;

int env_cap() {
  if (const char* v = std::getenv("PERFDIV_CAP")) {
    try {
      const int cap = std::stoi(v);
      if (cap > 0) return cap;
    } catch (const std::exception&) {
    }
    std::cerr << "perfdiv: ignoring invalid PERFDIV_CAP value '" << v << "'\n";
  }
  return kDecisionCap;
}

// "n:u-v,u-v,..." edge specs, e.g. "2:0-1" or "3:".
Graph parse_edge_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw ParseError("edge spec needs the form n:u-v,u-v");
  const int n = std::stoi(spec.substr(0, colon));
  std::vector<std::pair<int, int>> edges;
  std::stringstream rest(spec.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    if (item.empty()) continue;
    const auto dash = item.find('-');
    if (dash == std::string::npos)
      throw ParseError("edge spec item '" + item + "' needs the form u-v");
    edges.emplace_back(std::stoi(item.substr(0, dash)),
                       std::stoi(item.substr(dash + 1)));
  }
  return Graph::from_edges(n, edges);
}

json set_json(VertexSet s) { return json(s.elements()); }

json check_report_json(const Graph& g, int cap) {
  json j;
  j["n"] = g.size();
  j["edges"] = g.edge_count();
  if (!g.label().empty()) j["label"] = g.label();
  j["graph6"] = write_graph6(g);

  const auto om = omega(g);
  const auto al = alpha(g);
  const auto ch = chi(g, cap);
  j["omega"] = om.size;
  j["omega_witness"] = set_json(om.witness);
  j["alpha"] = al.size;
  j["alpha_witness"] = set_json(al.witness);
  j["chi"] = ch.chi;
  j["coloring"] = ch.coloring.assignment;

  const auto verdict = is_perfect(g, cap);
  j["perfect"] = verdict.perfect;
  if (!verdict.perfect) {
    j["imperfection_witness"] = {
        {"kind", verdict.kind == WitnessKind::odd_hole ? "odd_hole"
                                                       : "odd_antihole"},
        {"cycle", verdict.witness->cycle}};
  }

  if (g.size() > 0) {
    const auto gp = find_good_partition(g, std::max(cap, kPartitionSearchCap));
    j["good_partition"] =
        gp ? json{{"a", set_json(gp->a)}, {"b", set_json(gp->b)}}
           : json(nullptr);
  } else {
    j["good_partition"] = json(nullptr);
  }

  const auto pd = is_perfectly_divisible(g, cap);
  j["perfectly_divisible"] = {{"holds", pd.holds}};
  if (pd.failing_subgraph)
    j["perfectly_divisible"]["failing_subgraph"] = set_json(*pd.failing_subgraph);

  const auto div2 = is_k_divisible(g, 2, cap);
  j["two_divisible"] = {{"holds", div2.holds}};
  if (div2.failing_subgraph)
    j["two_divisible"]["failing_subgraph"] = set_json(*div2.failing_subgraph);

  const auto cut = find_clique_cutset(g);
  j["clique_cutset"] = cut ? json{{"c", set_json(cut->c)},
                                  {"v1", set_json(cut->v1)},
                                  {"v2", set_json(cut->v2)}}
                           : json(nullptr);

  j["simplicial"] = find_simplicial(g);
  j["bisimplicial"] = find_bisimplicial(g);

  j["free_of"] = {
      {"p5", is_l_free(g, {named("p5")}).free},
      {"c5", is_l_free(g, {named("c5")}).free},
      {"k23", is_l_free(g, {named("k23")}).free},
      {"fourK1", is_l_free(g, {named("fourK1")}).free},
      {"triangle", omega(g).size <= 2},
  };
  return j;
}

void print_check_text(const json& j, std::ostream& out) {
  out << "graph " << j["graph6"].get<std::string>();
  if (j.contains("label")) out << " (" << j["label"].get<std::string>() << ")";
  out << ": n=" << j["n"] << " edges=" << j["edges"] << "\n";
  out << "  omega=" << j["omega"] << " witness=" << j["omega_witness"].dump()
      << "\n";
  out << "  alpha=" << j["alpha"] << " witness=" << j["alpha_witness"].dump()
      << "\n";
  out << "  chi=" << j["chi"] << " coloring=" << j["coloring"].dump() << "\n";
  out << "  perfect=" << (j["perfect"].get<bool>() ? "yes" : "no");
  if (j.contains("imperfection_witness"))
    out << " witness=" << j["imperfection_witness"].dump();
  out << "\n";
  out << "  good_partition=" << j["good_partition"].dump() << "\n";
  out << "  perfectly_divisible=" << j["perfectly_divisible"].dump() << "\n";
  out << "  two_divisible=" << j["two_divisible"].dump() << "\n";
  out << "  clique_cutset=" << j["clique_cutset"].dump() << "\n";
  out << "  simplicial=" << j["simplicial"].dump()
      << " bisimplicial=" << j["bisimplicial"].dump() << "\n";
  out << "  free_of=" << j["free_of"].dump() << "\n";
}

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
      line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

struct CheckOptions {
  std::string graph6, name, edges;
  std::string format = "text";
  int cap = kDecisionCap;
};

int run_check(const CheckOptions& opt) {
  Graph g;
  try {
    if (!opt.name.empty())
      g = named(opt.name);
    else if (!opt.edges.empty())
      g = parse_edge_spec(opt.edges);
    else if (!opt.graph6.empty())
      g = parse_graph6(opt.graph6);
    else {
      std::cerr << "perfdiv check: provide a graph6 line, --name or --edges\n";
      return kExitInputError;
    }
  } catch (const std::exception& e) {
    std::cerr << "perfdiv check: " << e.what() << "\n";
    return kExitInputError;
  }
  if (g.size() > opt.cap) {
    std::cerr << "perfdiv check: graph has " << g.size()
              << " vertices, cap is " << opt.cap
              << " (raise with --cap or PERFDIV_CAP)\n";
    return kExitInputError;
  }
  const json report = check_report_json(g, opt.cap);
  if (opt.format == "json")
    std::cout << report.dump(2) << "\n";
  else
    print_check_text(report, std::cout);
  return kExitOk;
}

struct ScanOptions {
  std::string conjecture;
  std::string input;
  int all_n = -1;
  int jobs = 1;
  std::string format = "text";
  bool timings = false;
  int cap = kDecisionCap;
};

int run_scan(const ScanOptions& opt) {
  const ConjectureSpec* spec = find_conjecture(opt.conjecture);
  if (!spec) {
    std::cerr << "perfdiv scan: unknown conjecture id '" << opt.conjecture
              << "' (see registry in README)\n";
    return kExitInputError;
  }

  ScanReport report;
  const ScanLimits limits{opt.cap, opt.jobs};
  if (opt.all_n >= 0) {
    if (opt.all_n > 7) {
      std::cerr << "perfdiv scan: --all-n is limited to 7; feed larger "
                   "corpora through --input\n";
      return kExitInputError;
    }
    std::vector<Graph> corpus;
    for (int m = 0; m <= opt.all_n; ++m)
      for (auto& g : enumerate_small(m)) corpus.push_back(std::move(g));
    report = scan_graphs(corpus, *spec, limits,
                         "all-n " + std::to_string(opt.all_n));
  } else {
    std::vector<std::string> lines;
    if (opt.input.empty() || opt.input == "-") {
      lines = read_lines(std::cin);
    } else {
      std::ifstream file(opt.input);
      if (!file) {
        std::cerr << "perfdiv scan: cannot open '" << opt.input << "'\n";
        return kExitInputError;
      }
      lines = read_lines(file);
    }
    report = scan(lines, *spec, limits);
  }

  if (report.parse_errors > 0)
    std::cerr << "perfdiv scan: " << report.parse_errors
              << " corpus line(s) failed to parse\n";

  if (opt.format == "json")
    std::cout << report.to_json(opt.timings) << "\n";
  else
    std::cout << report.to_text(opt.timings);

  if (!report.counterexamples.empty())
    return spec->status == ConjectureStatus::theorem ? kExitTheoremViolated
                                                     : kExitDiscovery;
  return kExitOk;
}

struct GenOptions {
  int all_n = -1;
  std::vector<std::string> random;  // n p seed
  std::vector<std::string> glued;   // n1 n2 c p seed
};

int run_gen(const GenOptions& opt) {
  try {
    if (opt.all_n >= 0) {
      for (const Graph& g : enumerate_small(opt.all_n))
        std::cout << write_graph6(g) << "\n";
      return kExitOk;
    }
    if (!opt.random.empty()) {
      const int n = std::stoi(opt.random[0]);
      const double p = std::stod(opt.random[1]);
      const std::uint64_t seed = std::stoull(opt.random[2]);
      std::cout << write_graph6(random_graph(n, p, seed)) << "\n";
      return kExitOk;
    }
    if (!opt.glued.empty()) {
      const int n1 = std::stoi(opt.glued[0]);
      const int n2 = std::stoi(opt.glued[1]);
      const int c = std::stoi(opt.glued[2]);
      const double p = std::stod(opt.glued[3]);
      const std::uint64_t seed = std::stoull(opt.glued[4]);
      std::cout << write_graph6(random_glued(n1, n2, c, p, seed).graph)
                << "\n";
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "perfdiv gen: " << e.what() << "\n";
    return kExitInputError;
  }
  std::cerr << "perfdiv gen: pick one of --all-n, --random, --glued\n";
  return kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for perfect divisibility of graphs"};
  app.require_subcommand(1);
  const int default_cap = env_cap();

  CheckOptions check_opt;
  check_opt.cap = default_cap;
  auto* check = app.add_subcommand("check", "analyze a single graph");
  check->add_option("graph6", check_opt.graph6, "graph6 line");
  check->add_option("--name", check_opt.name, "catalog key (e.g. figure1)");
  check->add_option("--edges", check_opt.edges, "edge spec n:u-v,u-v");
  check->add_option("--format", check_opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  check->add_option("--cap", check_opt.cap, "exponential-search cap");

  ScanOptions scan_opt;
  scan_opt.cap = default_cap;
  auto* scan_cmd =
      app.add_subcommand("scan", "hunt counterexamples over a corpus");
  scan_cmd->add_option("--conjecture", scan_opt.conjecture, "registry id")
      ->required();
  scan_cmd->add_option("--input", scan_opt.input,
                       "graph6 file ('-' for stdin; default stdin)");
  scan_cmd->add_option("--all-n", scan_opt.all_n,
                       "scan all graphs with at most this many vertices (<=7)");
  scan_cmd->add_option("--jobs", scan_opt.jobs, "parallel workers")
      ->check(CLI::PositiveNumber);
  scan_cmd->add_option("--format", scan_opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  scan_cmd->add_flag("--timings", scan_opt.timings,
                     "include duration_ms in the report");
  scan_cmd->add_option("--cap", scan_opt.cap, "per-graph cap; larger graphs are skipped");

  GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "emit graph6 fixtures");
  gen->add_option("--all-n", gen_opt.all_n,
                  "all non-isomorphic graphs on exactly N vertices (<=7)");
  gen->add_option("--random", gen_opt.random, "N P SEED")->expected(3);
  gen->add_option("--glued", gen_opt.glued, "N1 N2 C P SEED")->expected(5);

  auto* verify =
      app.add_subcommand("verify-paper", "run the verification battery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (check->parsed()) return run_check(check_opt);
    if (scan_cmd->parsed()) return run_scan(scan_opt);
    if (gen->parsed()) return run_gen(gen_opt);
    if (verify->parsed())
      return run_paper_verification(std::cout).ok() ? kExitOk : 1;
  } catch (const CapExceeded& e) {
    std::cerr << "perfdiv: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "perfdiv: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
