#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "alphawidth/checks.hpp"
#include "alphawidth/constructions.hpp"
#include "alphawidth/generators.hpp"
#include "alphawidth/graph_io.hpp"
#include "alphawidth/mwis.hpp"
#include "alphawidth/params.hpp"

using namespace alphawidth;
using nlohmann::json;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Graph> load_graphs(const std::string& input, const std::string& graph, const std::string& format) {
  const auto fmt = parse_graph_format(format);
  if (!graph.empty()) return {parse_graph(graph, fmt)};
  if (input.empty()) throw UsageError("one of --input or --graph is required");
  auto graphs = read_graph_file(input, fmt);
  if (graphs.empty()) throw ParseError("no graphs in " + input);
  return graphs;
}

std::vector<CostKind> kinds_from(const std::string& kind) {
  if (kind == "both") return {CostKind::Cardinality, CostKind::Independence};
  return {parse_cost_kind(kind)};
}

Budgets budgets_from(const std::string& config, SuiteConfig* suite = nullptr) {
  if (config.empty()) return {};
  auto cfg = load_suite_config(config);
  if (suite) *suite = cfg;
  return cfg.budgets;
}

struct ParamArgs {
  std::string input, graph, format = "graph6", name, kind = "card", config;
  bool witness = false;
};

int run_param(const ParamArgs& a) {
  const auto budgets = budgets_from(a.config);
  const auto p = parse_parameter(a.name, parse_cost_kind(a.kind));
  std::string display = p.kind == CostKind::Independence ? "alpha-" + p.base : p.base;
  for (const auto& g : load_graphs(a.input, a.graph, a.format)) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto v = evaluate_parameter(g, p, budgets);
    json out = {{"parameter", display}, {"kind", std::string(to_string(p.kind))}, {"value", v.value}};
    if (a.witness && !v.witness.is_null()) out["witness"] = v.witness;
    out["elapsed_ms"] = ms_since(t0);
    std::cout << out.dump() << "\n";
  }
  return kPass;
}

struct VerifyArgs {
  std::string check, kind = "both", log, config, rho;
  std::vector<std::string> families;
  std::vector<int> c;
  int jobs = 1, max_n = 0;
  std::uint64_t seed = 1;
  bool expect_failure = false, all = false;
};

int run_verify(const VerifyArgs& a) {
  SuiteConfig suite;
  if (!a.config.empty()) suite = load_suite_config(a.config);
  std::vector<std::string> names;
  if (a.all) {
    if (!a.check.empty()) throw UsageError("give either a check name or --all");
    for (const auto& info : registered_checks()) names.push_back(info.name);
  } else {
    if (a.check.empty()) throw UsageError("a check name is required");
    if (!is_registered_check(a.check)) throw UsageError("unknown check '" + a.check + "'");
    names.push_back(a.check);
  }
  if (!a.c.empty() && a.rho.empty()) throw UsageError("--c needs --rho");

  std::ofstream log;
  if (!a.log.empty()) {
    log.open(a.log);
    if (!log) throw UsageError("cannot write " + a.log);
  }
  bool pass = true;
  json reports = json::array();
  for (const auto& name : names) {
    CheckSpec spec;
    spec.name = name;
    for (const auto& f : a.families) spec.families.push_back(parse_family(f));
    spec.kinds = kinds_from(a.kind);
    if (!a.rho.empty()) {
      const auto rho = parse_target_param(a.rho);
      for (int c : a.c.empty() ? std::vector<int>{0, 1, 2} : a.c) spec.modulators.push_back({rho, c});
    }
    spec.seed = a.seed;
    spec.jobs = a.jobs;
    spec.max_n = a.max_n;
    spec.expect_failure = a.expect_failure;
    spec.budgets = suite.budgets;
    spec = with_defaults(std::move(spec), suite.defaults);
    auto report = run_check(spec, [&](const InstanceRecord& r) {
      if (log) log << json(r).dump() << "\n";
    });
    pass = pass && report.pass;
    reports.push_back(report);
  }
  std::cout << (a.all ? reports : reports[0]).dump(2) << "\n";
  return pass ? kPass : kFail;
}

struct ConstructArgs {
  std::string kind, format = "graph6", input, input_format = "graph6";
  int iterate = 1;
  bool every = false;
};

int run_construct(const ConstructArgs& a) {
  const auto kind = parse_substitution_kind(a.kind);
  if (a.iterate < 0) throw UsageError("--iterate must be non-negative");
  const auto fmt = parse_graph_format(a.format);
  Graph g = a.input.empty() ? complete_graph(1) : load_graphs(a.input, "", a.input_format).front();
  if (a.every) std::cout << format_graph(g, fmt);
  for (int i = 0; i < a.iterate; ++i) {
    g = substitute(g, kind);
    if (a.every || i + 1 == a.iterate) std::cout << format_graph(g, fmt);
  }
  if (a.iterate == 0 && !a.every) std::cout << format_graph(g, fmt);
  return kPass;
}

struct MwisArgs {
  std::string input, graph, format = "graph6", weights, algorithm = "exact", config;
  int k = -1, jobs = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_mwis(const MwisArgs& a) {
  const auto budgets = budgets_from(a.config);
  const Graph g = load_graphs(a.input, a.graph, a.format).front();
  std::vector<std::int64_t> w(static_cast<std::size_t>(g.order()), 1);
  if (!a.weights.empty()) w = parse_weights(read_file(a.weights));
  if (static_cast<int>(w.size()) != g.order()) {
    throw UsageError("expected " + std::to_string(g.order()) + " weights, got " + std::to_string(w.size()));
  }
  const WeightedGraph wg(g, w);
  const auto t0 = std::chrono::steady_clock::now();
  MwisResult r;
  json out = {{"algorithm", a.algorithm}};
  if (a.algorithm == "exact") {
    r = mwis_exact(wg, budgets);
  } else if (a.algorithm == "bipartite") {
    r = mwis_bipartite(wg);
  } else if (a.algorithm == "oct") {
    if (a.k < 0) throw UsageError("--algorithm oct needs --k");
    r = a.jobs > 1 ? mwis_via_oct_parallel(wg, a.k, a.jobs, budgets) : mwis_via_oct(wg, a.k, budgets);
    out["k"] = a.k;
  } else {
    throw UsageError("unknown algorithm '" + a.algorithm + "'");
  }
  out["weight"] = r.weight;
  out["set"] = r.set.to_vector();
  out["elapsed_ms"] = ms_since(t0);
  std::cout << out.dump() << "\n";
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alpha-width parameters, modulators and verification suites"};
  app.require_subcommand(1);

  ParamArgs pa;
  auto* param = app.add_subcommand("param", "evaluate a graph parameter");
  param->add_option("parameter", pa.name, "e.g. tw, alpha-pw, vc, chi")->required();
  param->add_option("--input", pa.input, "graph file");
  param->add_option("--graph", pa.graph, "graph given inline");
  param->add_option("--format", pa.format, "graph6|dimacs|edges")->capture_default_str();
  param->add_option("--kind", pa.kind, "card|alpha")->capture_default_str();
  param->add_option("--config", pa.config, "JSON config with budgets");
  param->add_flag("--witness", pa.witness, "include the witness");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run a registered check");
  verify->add_option("check", va.check, "check name");
  verify->add_flag("--all", va.all, "run every registered check");
  verify->add_option("--family", va.families, "graph family, repeatable");
  verify->add_option("--max-n", va.max_n, "upper end for all: and indexed named: families");
  verify->add_option("--kind", va.kind, "card|alpha|both")->capture_default_str();
  verify->add_option("--rho", va.rho, "modulator target: omega|chi|tw|pw|td|delta");
  verify->add_option("--c", va.c, "modulator bound, repeatable");
  verify->add_option("--seed", va.seed)->capture_default_str();
  verify->add_option("--jobs", va.jobs)->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--log", va.log, "JSONL file, one line per instance");
  verify->add_option("--config", va.config, "JSON config with budgets and families");
  verify->add_flag("--expect-failure", va.expect_failure, "pass iff some instance fails");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "iterate a substitution starting from K1");
  construct->add_option("kind", ca.kind, "s-claw|p5|net")->required();
  construct->add_option("--iterate", ca.iterate)->capture_default_str();
  construct->add_option("--format", ca.format, "graph6|dimacs|edges")->capture_default_str();
  construct->add_option("--input", ca.input, "start from this graph instead of K1");
  construct->add_option("--input-format", ca.input_format)->capture_default_str();
  construct->add_flag("--every", ca.every, "emit every iterate, not just the last");

  MwisArgs ma;
  auto* mwis = app.add_subcommand("mwis", "maximum weight independent set");
  mwis->add_option("--input", ma.input, "graph file");
  mwis->add_option("--graph", ma.graph, "graph given inline");
  mwis->add_option("--format", ma.format, "graph6|dimacs|edges")->capture_default_str();
  mwis->add_option("--weights", ma.weights, "one integer per line; unit weights if absent");
  mwis->add_option("--algorithm", ma.algorithm, "exact|bipartite|oct")->capture_default_str();
  mwis->add_option("--k", ma.k, "alpha bound of the odd cycle transversal");
  mwis->add_option("--jobs", ma.jobs)->capture_default_str()->check(CLI::PositiveNumber);
  mwis->add_option("--config", ma.config);

  bool as_json = false;
  auto* list = app.add_subcommand("list-checks", "list registered checks");
  list->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*param) return run_param(pa);
    if (*verify) return run_verify(va);
    if (*construct) return run_construct(ca);
    if (*mwis) return run_mwis(ma);
    if (*list) {
      json out = json::array();
      for (const auto& c : registered_checks()) {
        if (as_json) {
          out.push_back({{"name", c.name}, {"claim", c.claim}, {"families", c.default_families}});
        } else {
          std::cout << c.name << "\t" << c.claim << "\n";
        }
      }
      if (as_json) std::cout << out.dump(2) << "\n";
      return kPass;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
