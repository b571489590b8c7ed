// compnum: competition numbers, clique covers and lower bounds from the shell.
//
//   compnum gen icosahedron -o ico.json
//   compnum bounds ico.json --m-max 3
//   compnum exact octahedron.txt --json
//   compnum verify data/icosahedron_k4.json
//   compnum paper-report
//
// Exit codes: 0 success / valid, 1 invalid certificate or value mismatch,
// 2 usage or parse error.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "compnum/bounds.hpp"
#include "compnum/competition.hpp"
#include "compnum/cover.hpp"
#include "compnum/error.hpp"
#include "compnum/generators.hpp"
#include "compnum/io.hpp"
#include "compnum/solids.hpp"

namespace {

using nlohmann::ordered_json;
using namespace compnum;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

struct Options {
  bool json = false;
  bool deterministic = false;
  int m_max = 3;
  long long budget_ms = 10'000;
  long long budget_nodes = 10'000'000;
  int max_vertices = 10;
  std::string input;
  std::string output;
  std::string family;
  std::vector<int> params;
};

class Timer {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Graph read_input_graph(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return parse_graph(buf.str());
  }
  return load_graph(path);
}

ordered_json vertex_list(std::span<const Vertex> vs) { return std::vector<Vertex>(vs.begin(), vs.end()); }

ordered_json cliques_json(const std::vector<Clique>& cliques) {
  ordered_json out = ordered_json::array();
  for (const Clique& c : cliques) out.push_back(vertex_list(c.members()));
  return out;
}

ordered_json graph_summary(const Graph& g) {
  ordered_json s;
  s["n"] = g.vertex_count();
  s["m"] = g.edge_count();
  s["degrees"] = g.degree_sequence();
  return s;
}

std::string format_list(std::span<const Vertex> vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i]);
  return out + "}";
}

// Wraps a command result into the run report and prints it.
void emit(const Options& opt, const std::string& command, const Graph* g, ordered_json result,
          const Timer& timer, std::uint64_t nodes, const std::string& table) {
  if (opt.json) {
    ordered_json report;
    report["command"] = command;
    if (g != nullptr) report["graph"] = graph_summary(*g);
    report["result"] = std::move(result);
    report["time_ms"] = opt.deterministic ? 0.0 : timer.elapsed_ms();
    report["nodes"] = nodes;
    std::cout << report.dump(2) << '\n';
    return;
  }
  if (g != nullptr) {
    std::cout << "graph: n=" << g->vertex_count() << " m=" << g->edge_count() << '\n';
  }
  std::cout << table;
  if (!opt.deterministic) {
    std::cout << "time: " << std::fixed << std::setprecision(1) << timer.elapsed_ms() << " ms, nodes: " << nodes
              << '\n';
  }
}

int cmd_generate(const Options& opt) {
  Graph g = generate(FamilySpec{opt.family, opt.params});
  if (!opt.output.empty()) {
    save_graph(opt.output, g);
  } else if (opt.json) {
    std::cout << render_graph_json(g) << '\n';
  } else {
    std::cout << render_edge_list(g);
  }
  return kExitOk;
}

ordered_json bound_report_json(const BoundReport& report) {
  ordered_json out;
  out["graph"] = report.graph_id;
  out["entries"] = ordered_json::array();
  for (const BoundEntry& e : report.entries) {
    ordered_json entry;
    entry["name"] = e.name;
    entry["value"] = e.value;
    entry["kind"] = to_string(e.kind);
    entry["witness"] = e.witness;
    entry["note"] = e.note;
    out["entries"].push_back(std::move(entry));
  }
  out["best_lower"] = report.best_lower;
  if (report.exact) out["exact"] = *report.exact;
  return out;
}

int cmd_bounds(const Options& opt) {
  Timer timer;
  Graph g = read_input_graph(opt.input);
  if (opt.m_max < 1) throw CLI::ValidationError("--m-max", "must be at least 1");
  BoundReport report = best_lower_bound(g, opt.m_max, opt.input);

  std::ostringstream table;
  table << std::left << std::setw(16) << "bound" << std::setw(8) << "kind" << std::setw(8) << "value" << "note\n";
  for (const BoundEntry& e : report.entries) {
    table << std::setw(16) << e.name << std::setw(8) << to_string(e.kind) << std::setw(8) << e.value << e.note
          << '\n';
  }
  table << "best lower bound: " << report.best_lower
        << (report.entries.empty() || report.best_lower > 0 ? "" : " (trivial floor)") << '\n';
  if (report.exact) table << "exact (closed form): " << *report.exact << '\n';
  emit(opt, "bounds", &g, bound_report_json(report), timer, 0, table.str());
  return kExitOk;
}

int cmd_exact(const Options& opt) {
  Timer timer;
  Graph g = read_input_graph(opt.input);
  ExactBudget budget;
  budget.max_vertices = opt.max_vertices;
  budget.max_nodes = static_cast<std::uint64_t>(opt.budget_nodes);
  budget.max_time = std::chrono::milliseconds(opt.budget_ms);
  ExactResult r = exact_competition_number(g, budget);

  ordered_json result;
  result["status"] = r.exact() ? "exact" : "inconclusive";
  if (r.exact()) result["k"] = r.upper;
  result["lower"] = r.lower;
  result["upper"] = r.upper;
  if (!r.reason.empty()) result["reason"] = r.reason;
  result["certificate"] = ordered_json::parse(render_certificate_json(r.certificate));

  std::ostringstream table;
  if (r.exact()) {
    table << "k = " << r.upper << " (exact)\n";
  } else {
    table << "inconclusive: " << r.lower << " <= k <= " << r.upper << " (" << r.reason << ")\n";
  }
  table << "certificate (k=" << r.certificate.k << "):\n";
  for (std::size_t i = 0; i < r.certificate.order.size(); ++i) {
    if (r.certificate.assignment[i].empty()) continue;
    table << "  " << format_list(r.certificate.assignment[i].members()) << " -> " << r.certificate.order[i] << '\n';
  }
  emit(opt, "exact", &g, std::move(result), timer, r.nodes, table.str());
  return kExitOk;
}

int cmd_theta(const Options& opt, CoverKind kind) {
  Timer timer;
  Graph g = read_input_graph(opt.input);
  CoverResult r = kind == CoverKind::Edge ? theta_edge(g) : theta_vertex(g);
  const std::string name = kind == CoverKind::Edge ? "theta-e" : "theta-v";
  ordered_json result;
  result["value"] = r.value;
  result["witness"] = cliques_json(r.witness.cliques);
  std::ostringstream table;
  table << name << " = " << r.value << '\n';
  for (const Clique& c : r.witness.cliques) table << "  " << format_list(c.members()) << '\n';
  emit(opt, name, &g, std::move(result), timer, r.nodes, table.str());
  return kExitOk;
}

int cmd_verify(const Options& opt) {
  Timer timer;
  ConstructionCertificate cert = parse_certificate_json(read_file(opt.input));
  CertificateCheck check = verify_certificate(cert);
  ordered_json result;
  result["valid"] = check.valid;
  result["k"] = cert.k;
  result["violations"] = check.violations;
  ordered_json missing = ordered_json::array();
  for (const Edge& e : check.missing) missing.push_back({e.u, e.v});
  ordered_json surplus = ordered_json::array();
  for (const Edge& e : check.surplus) surplus.push_back({e.u, e.v});
  result["missing"] = std::move(missing);
  result["surplus"] = std::move(surplus);
  std::string table = check.valid ? "valid: G + I_" + std::to_string(cert.k) + " is the competition graph of an acyclic digraph\n"
                                  : "invalid:\n" + check.diagnostic();
  emit(opt, "verify", &cert.graph, std::move(result), timer, 0, table);
  return check.valid ? kExitOk : kExitInvalid;
}

int cmd_paper_report(const Options& opt) {
  Timer timer;
  SolidsReport report = reproduce_solids();

  ordered_json result;
  result["solids"] = ordered_json::array();
  std::ostringstream table;
  table << std::left << std::setw(14) << "solid" << std::setw(10) << "expected" << std::setw(10) << "computed"
        << std::setw(6) << "ok" << "method\n";
  for (const SolidRow& row : report.rows) {
    table << std::setw(14) << row.name << std::setw(10) << row.expected << std::setw(10) << row.computed
          << std::setw(6) << (row.ok ? "yes" : "NO") << row.method << '\n';
    ordered_json r;
    r["name"] = row.name;
    r["expected"] = row.expected;
    r["computed"] = row.computed;
    r["method"] = row.method;
    r["ok"] = row.ok;
    result["solids"].push_back(std::move(r));
  }
  table << "\ntheta_E(icosahedron) = " << report.icosahedron_theta_e << (report.theta_e_ok ? "" : "  MISMATCH")
        << '\n';
  table << "\nlocal covers over 3-subsets U of the icosahedron:\n";
  table << std::setw(10) << "G[U]" << std::setw(10) << "subsets" << std::setw(10) << "expected" << "observed\n";
  result["theta_e_icosahedron"] = report.icosahedron_theta_e;
  result["local_cases"] = ordered_json::array();
  for (const LocalCaseRow& row : report.local_cases) {
    table << std::setw(10) << row.induced_type << std::setw(10) << row.subsets << std::setw(10) << row.expected
          << format_list(row.values) << (row.ok ? "" : "  MISMATCH") << '\n';
    ordered_json r;
    r["type"] = row.induced_type;
    r["subsets"] = row.subsets;
    r["expected"] = row.expected;
    r["observed"] = row.values;
    r["ok"] = row.ok;
    result["local_cases"].push_back(std::move(r));
  }
  table << "lower bound with m=3: " << report.subset_m3 << "; certificate k=4 "
        << (report.certificate_ok ? "verified" : "REJECTED") << '\n';
  result["subset_m3"] = report.subset_m3;
  result["certificate_ok"] = report.certificate_ok;
  result["all_ok"] = report.all_ok();
  emit(opt, "paper-report", nullptr, std::move(result), timer, report.nodes, table.str());
  if (!report.all_ok()) {
    std::cerr << "paper-report: computed values differ from the expected table\n";
    return kExitInvalid;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Competition numbers, clique covers and lower bounds of small graphs"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Emit machine-readable JSON");
  app.add_flag("--deterministic", opt.deterministic, "Zero timing fields");

  auto* gen = app.add_subcommand("gen", "Generate a named graph");
  gen->add_option("family", opt.family, "Family name")->required();
  gen->add_option("params", opt.params, "Integer parameters");
  gen->add_option("-o,--output", opt.output, "Output file (.json for JSON, edge list otherwise)");

  auto* bounds = app.add_subcommand("bounds", "Lower bounds and closed forms for k(G)");
  bounds->add_option("graph", opt.input, "Graph file ('-' for stdin)")->required();
  bounds->add_option("--m-max", opt.m_max, "Largest subset size for the subset bound");

  auto* exact = app.add_subcommand("exact", "Exact competition number with certificate");
  exact->add_option("graph", opt.input, "Graph file ('-' for stdin)")->required();
  exact->add_option("--budget-ms", opt.budget_ms, "Wall-clock budget in milliseconds");
  exact->add_option("--budget-nodes", opt.budget_nodes, "Search node budget");
  exact->add_option("--max-vertices", opt.max_vertices, "Largest graph the exact search accepts");

  auto* theta_e = app.add_subcommand("theta-e", "Minimum edge clique cover");
  theta_e->add_option("graph", opt.input, "Graph file ('-' for stdin)")->required();
  auto* theta_v = app.add_subcommand("theta-v", "Minimum vertex clique cover");
  theta_v->add_option("graph", opt.input, "Graph file ('-' for stdin)")->required();

  auto* verify = app.add_subcommand("verify", "Check a construction certificate");
  verify->add_option("certificate", opt.input, "Certificate JSON file")->required();

  auto* report = app.add_subcommand("paper-report", "Recompute the Platonic-solid table");

  for (auto* sub : {gen, bounds, exact, theta_e, theta_v, verify, report}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) return cmd_generate(opt);
    if (*bounds) return cmd_bounds(opt);
    if (*exact) return cmd_exact(opt);
    if (*theta_e) return cmd_theta(opt, CoverKind::Edge);
    if (*theta_v) return cmd_theta(opt, CoverKind::Vertex);
    if (*verify) return cmd_verify(opt);
    if (*report) return cmd_paper_report(opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitUsage;
}
