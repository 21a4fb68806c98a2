// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "alphawidth/base_params.hpp"
#include "alphawidth/checks.hpp"
#include "alphawidth/constructions.hpp"
#include "alphawidth/generators.hpp"
#include "alphawidth/graph_io.hpp"
#include "alphawidth/modulators.hpp"
#include "alphawidth/mwis.hpp"
#include "alphawidth/widths.hpp"

using namespace alphawidth;

namespace {

constexpr auto kCard = CostKind::Cardinality;
constexpr auto kAlpha = CostKind::Independence;

struct Verdict {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) note << "; ";
      note << what;
      ok = false;
    }
  }
};

CheckReport run_default(const std::string& name) {
  CheckSpec spec;
  spec.name = name;
  return run_check(with_defaults(spec));
}

void expect_report(Verdict& v, const CheckReport& r, long long instances) {
  v.require(r.pass, r.name + " reported " + std::to_string(r.failures.size()) + " failures" +
                        (r.failures.empty() ? "" : " (first " + r.failures[0].graph6 + ": " + r.failures[0].detail + ")"));
  if (instances >= 0) {
    v.require(r.instances_tested == instances,
              r.name + " tested " + std::to_string(r.instances_tested) + " instances, wanted " + std::to_string(instances));
  }
}

int failed = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  v.require(secs <= limit_s, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s");
  if (!v.ok) ++failed;
  std::printf("%s criterion %d (%s): %.2f s%s%s\n", v.ok ? "PASS" : "FAIL", id, title, secs, v.ok ? "" : " -- ",
              v.note.str().c_str());
  std::fflush(stdout);
}

bool validates_everywhere(const Graph& g) {
  for (CostKind kind : kBothKinds) {
    auto tw = lambda_treewidth(g, kind);
    auto pw = lambda_pathwidth(g, kind);
    auto td = lambda_treedepth(g, kind);
    if (!validate_tree_decomposition(g, tw.witness).empty() || cost(g, tw.witness, kind) != tw.value) return false;
    if (!validate_path_decomposition(g, pw.witness).empty() || cost(g, pw.witness, kind) != pw.value) return false;
    if (!validate_treedepth_decomposition(g, td.witness).empty() || cost(g, td.witness, kind) != td.value) return false;
    auto order = degeneracy(g, kind).witness;
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> ids(g.order());
    std::iota(ids.begin(), ids.end(), 0);
    if (sorted != ids) return false;
  }
  if (!g.is_independent(g.vertices() - vertex_cover_number(g).witness)) return false;
  if (!is_acyclic(g, g.vertices() - feedback_vertex_number(g).witness)) return false;
  if (!is_bipartite(g.without(oct_number(g).witness))) return false;
  auto coloring = alpha_chromatic(g).witness;
  for (auto [u, v] : g.edges())
    if (coloring[u] == coloring[v]) return false;
  if (is_chordal(g) && !validate_tree_decomposition(g, chordal_clique_tree(g)).empty()) return false;
  auto fvs = feedback_vertex_number(g).witness;
  if (!validate_tree_decomposition(g, tree_decomp_from_fvs(g, fvs)).empty()) return false;
  WeightedGraph wg(g, std::vector<std::int64_t>(g.order(), 1));
  if (!g.is_independent(mwis_exact(wg).set)) return false;
  return true;
}

nlohmann::json timeless(const CheckReport& r) {
  nlohmann::json j = r;
  j.erase("elapsed_ms");
  return j;
}

}  // namespace

int main() {
  criterion(1, "chain-inequality on all graphs up to 7 vertices", 600, [](Verdict& v) {
    expect_report(v, run_default("chain-inequality"), 1252);
  });

  criterion(2, "gamma-witness", 300, [](Verdict& v) {
    v.require(lambda_pathwidth(gamma_family(1), kAlpha).value == 1, "alpha-pw(S1) != 1");
    v.require(lambda_pathwidth(gamma_family(2), kAlpha).value == 2, "alpha-pw(S2) != 2");
    const auto s3 = gamma_family(3);
    v.require(lambda_pw_at_most(s3, kAlpha, 3), "alpha-pw(S3) <= 3 not achieved");
    v.require(!lambda_pw_at_most(s3, kAlpha, 2), "alpha-pw(S3) <= 2 not refuted");
    for (int n = 1; n <= 3; ++n) {
      const auto s = gamma_family(n);
      const auto tag = "S" + std::to_string(n);
      v.require(clique_number(s) == n, "omega(" + tag + ") != n");
      v.require(lambda_td_at_most(s, kCard, 2 * n), "td(" + tag + ") > 2n");
      v.require(is_chordal(s), tag + " not chordal");
      for (const auto& h : {path_graph(6), cycle_graph(4), cycle_graph(5), cycle_graph(6)}) {
        v.require(!contains_induced(s, h), tag + " has a forbidden induced subgraph");
      }
      v.require(cost(s, chordal_clique_tree(s), kAlpha) == 1, "alpha-tw(" + tag + ") != 1");
    }
    expect_report(v, run_default("gamma-witness"), 3);
  });

  criterion(3, "sclaw-increment with p5 and net variants", 600, [](Verdict& v) {
    auto r = run_default("sclaw-increment");
    expect_report(v, r, 1 + 2 + 4 + 20);
  });

  criterion(4, "ramsey-binding and small Ramsey certification", 600, [](Verdict& v) {
    expect_report(v, run_default("ramsey-binding"), 1 + 2 + 4 + 11 + 34 + 156);
    v.require(ramsey_property_check(6, 3, 3), "R(3,3) <= 6 not certified");
    v.require(!ramsey_property_check(5, 3, 3), "5-vertex counterexample not found");
  });

  criterion(5, "modulator identities, slack, minimality, delta", 900, [](Verdict& v) {
    expect_report(v, run_default("modulator-identities"), 208);
    expect_report(v, run_default("modulator-slack"), 208);
    expect_report(v, run_default("modulator-minimality"), 208);
    expect_report(v, run_default("delta-not-inheritable"), 7);
  });

  criterion(6, "mwis-equivalence", 600, [](Verdict& v) {
    expect_report(v, run_default("mwis-equivalence"), 1252 + 200 + 200);
  });

  criterion(7, "formula checks", 600, [](Verdict& v) {
    expect_report(v, run_default("td-path-formula"), 15);
    for (int s = 1; s <= 8; ++s) {
      v.require(lambda_treewidth(complete_graph(s), kCard).value == s, "tw(K" + std::to_string(s) + ") != s");
    }
    for (int n = 2; n <= 8; ++n) {
      for (const auto& g : enumerate_graphs(n)) {
        if (g.edge_count() == n - 1 && is_acyclic(g, g.vertices())) {
          v.require(lambda_treewidth(g, kCard).value == 2, "tree " + to_graph6(g) + " has tw != 2");
        }
      }
    }
    for (int n = 4; n <= 14; ++n) {
      v.require(lambda_treewidth(cycle_graph(n), kCard).value == 3, "tw(C" + std::to_string(n) + ") != 3");
    }
    expect_report(v, run_default("nk2-knn-witness"), 10);
  });

  criterion(8, "fvs-alpha-tw-bound", 600, [](Verdict& v) {
    expect_report(v, run_default("fvs-alpha-tw-bound"), 208);
  });

  criterion(9, "alpha-chi-nkn", 300, [](Verdict& v) {
    for (int s = 1; s <= 5; ++s) {
      v.require(alpha_chromatic(complete_graph(s)).value == 1, "alpha-chi(K" + std::to_string(s) + ") != 1");
    }
    v.require(alpha_chromatic(disjoint_copies(2, complete_graph(2))).value == 2, "alpha-chi(2K2) != 2");
    v.require(alpha_chromatic(disjoint_copies(3, complete_graph(3))).value >= 3, "alpha-chi(3K3) < 3");
    expect_report(v, run_default("alpha-chi-nkn"), -1);
  });

  criterion(10, "infrastructure: graph6, invariance, witnesses, determinism", 900, [](Verdict& v) {
    for (int n = 0; n <= 6; ++n) {
      for (const auto& g : enumerate_graphs(n)) {
        v.require(parse_graph6(to_graph6(g)) == g, "graph6 round trip fails on " + to_graph6(g));
        v.require(validates_everywhere(g), "a witness fails validation on " + to_graph6(g));
      }
    }
    expect_report(v, run_default("iso-invariance"), 208);
    for (const auto& info : registered_checks()) {
      v.require(timeless(run_default(info.name)) == timeless(run_default(info.name)),
                info.name + " differs between two runs");
    }
  });

  return failed == 0 ? 0 : 1;
}
