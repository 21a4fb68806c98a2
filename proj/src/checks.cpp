#include "alphawidth/checks.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <chrono>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "alphawidth/base_params.hpp"
#include "alphawidth/generators.hpp"
#include "alphawidth/mwis.hpp"
#include "alphawidth/params.hpp"
#include "alphawidth/widths.hpp"

namespace alphawidth {

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad number '" + std::string(s) + "' in family '" + std::string(whole) + "'");
  }
  return v;
}

std::pair<int, int> parse_range(std::string_view s, std::string_view whole) {
  auto dash = s.find('-');
  if (dash == std::string_view::npos) {
    int v = parse_int(s, whole);
    return {v, v};
  }
  int lo = parse_int(s.substr(0, dash), whole);
  int hi = parse_int(s.substr(dash + 1), whole);
  if (lo < 0 || hi < lo) throw std::invalid_argument("bad range in family '" + std::string(whole) + "'");
  return {lo, hi};
}

std::string range_text(int lo, int hi) {
  return lo == hi ? std::to_string(lo) : std::to_string(lo) + "-" + std::to_string(hi);
}

const std::vector<std::string> kIndexedFamilies = {"P", "C", "K", "E", "star", "S", "nK2", "Knn", "nKn"};

std::string_view format_name(GraphFormat f) {
  switch (f) {
    case GraphFormat::Graph6: return "graph6";
    case GraphFormat::Dimacs: return "dimacs";
    case GraphFormat::EdgeList: return "edges";
  }
  return "graph6";
}

}  // namespace

std::string GraphFamilySpec::text() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::EnumerateAll: out << "all:" << range_text(lo, hi); break;
    case Kind::Random:
    case Kind::RandomBipartite:
      out << (kind == Kind::Random ? "random" : "random-bipartite") << ":n=" << range_text(lo, hi) << ",p=" << p
          << ",seed=" << seed << ",count=" << count;
      break;
    case Kind::Named:
      out << "named:" << name;
      if (lo >= 0 && std::find(kIndexedFamilies.begin(), kIndexedFamilies.end(), name) != kIndexedFamilies.end()) {
        out << ":" << range_text(lo, hi);
      }
      break;
    case Kind::File: out << "file:" << path << ":" << format_name(format); break;
  }
  return out.str();
}

GraphFamilySpec parse_family(std::string_view text) {
  GraphFamilySpec spec;
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("family '" + std::string(text) + "' has no kind");
  const auto kind = text.substr(0, colon);
  const auto rest = text.substr(colon + 1);
  if (kind == "all") {
    spec.kind = GraphFamilySpec::Kind::EnumerateAll;
    std::tie(spec.lo, spec.hi) = parse_range(rest, text);
    if (spec.hi > kMaxEnumerationOrder) {
      throw BudgetExceeded("enumeration supports at most " + std::to_string(kMaxEnumerationOrder) + " vertices");
    }
  } else if (kind == "random" || kind == "random-bipartite") {
    spec.kind = kind == "random" ? GraphFamilySpec::Kind::Random : GraphFamilySpec::Kind::RandomBipartite;
    spec.count = 1;
    bool have_n = false;
    std::string_view items = rest;
    while (!items.empty()) {
      auto comma = items.find(',');
      auto item = items.substr(0, comma);
      items = comma == std::string_view::npos ? std::string_view() : items.substr(comma + 1);
      auto eq = item.find('=');
      if (eq == std::string_view::npos) throw std::invalid_argument("expected key=value in '" + std::string(text) + "'");
      auto key = item.substr(0, eq);
      auto value = item.substr(eq + 1);
      if (key == "n") {
        std::tie(spec.lo, spec.hi) = parse_range(value, text);
        have_n = true;
      } else if (key == "p") {
        try {
          std::size_t used = 0;
          spec.p = std::stod(std::string(value), &used);
          if (used != value.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
          throw std::invalid_argument("bad probability in '" + std::string(text) + "'");
        }
        if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw std::invalid_argument("probability must be in [0, 1]");
      } else if (key == "seed") {
        std::uint64_t s = 0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), s);
        if (ec != std::errc() || ptr != value.data() + value.size()) {
          throw std::invalid_argument("bad seed in '" + std::string(text) + "'");
        }
        spec.seed = s;
      } else if (key == "count") {
        spec.count = parse_int(value, text);
        if (spec.count < 0) throw std::invalid_argument("count must be non-negative");
      } else {
        throw std::invalid_argument("unknown key '" + std::string(key) + "' in '" + std::string(text) + "'");
      }
    }
    if (!have_n) throw std::invalid_argument("random family needs n=... in '" + std::string(text) + "'");
  } else if (kind == "named") {
    spec.kind = GraphFamilySpec::Kind::Named;
    auto c2 = rest.find(':');
    spec.name = std::string(rest.substr(0, c2));
    spec.lo = spec.hi = -1;
    if (c2 != std::string_view::npos) {
      if (std::find(kIndexedFamilies.begin(), kIndexedFamilies.end(), spec.name) == kIndexedFamilies.end()) {
        throw std::invalid_argument("unknown indexed family '" + spec.name + "'");
      }
      std::tie(spec.lo, spec.hi) = parse_range(rest.substr(c2 + 1), text);
    } else {
      named_graph(spec.name);
    }
  } else if (kind == "file") {
    spec.kind = GraphFamilySpec::Kind::File;
    std::string_view path = rest;
    auto c2 = rest.rfind(':');
    if (c2 != std::string_view::npos) {
      auto fmt = rest.substr(c2 + 1);
      if (fmt == "graph6" || fmt == "dimacs" || fmt == "edges") {
        spec.format = parse_graph_format(fmt);
        path = rest.substr(0, c2);
      }
    }
    if (path.empty()) throw std::invalid_argument("file family needs a path");
    spec.path = std::string(path);
  } else {
    throw std::invalid_argument("unknown family kind '" + std::string(kind) + "'");
  }
  return spec;
}

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Graph indexed_member(const std::string& family, int q) {
  if (family == "P") return path_graph(q);
  if (family == "C") return cycle_graph(q);
  if (family == "K") return complete_graph(q);
  if (family == "E") return empty_graph(q);
  if (family == "star") return star_graph(q);
  if (family == "S") return gamma_family(q);
  if (family == "nK2") return disjoint_copies(q, complete_graph(2));
  if (family == "Knn") return complete_bipartite(q, q);
  if (family == "nKn") return disjoint_copies(q, complete_graph(q));
  throw std::invalid_argument("unknown indexed family '" + family + "'");
}

}  // namespace

std::vector<FamilyMember> materialize(const GraphFamilySpec& spec) {
  std::vector<FamilyMember> out;
  switch (spec.kind) {
    case GraphFamilySpec::Kind::EnumerateAll:
      for (int n = spec.lo; n <= spec.hi; ++n)
        for (auto& g : enumerate_graphs(n)) out.push_back({std::move(g), "all", n});
      break;
    case GraphFamilySpec::Kind::Random:
    case GraphFamilySpec::Kind::RandomBipartite:
      for (int i = 0; i < spec.count; ++i) {
        std::uint64_t s = mix(spec.seed * 1000003ULL + static_cast<std::uint64_t>(i));
        int n = spec.lo + static_cast<int>(s % static_cast<std::uint64_t>(spec.hi - spec.lo + 1));
        Graph g = spec.kind == GraphFamilySpec::Kind::Random ? random_graph(n, spec.p, mix(s))
                                                             : random_bipartite_graph(n, spec.p, mix(s));
        out.push_back({std::move(g), spec.kind == GraphFamilySpec::Kind::Random ? "random" : "random-bipartite", i});
      }
      break;
    case GraphFamilySpec::Kind::Named:
      if (spec.lo < 0) {
        out.push_back({named_graph(spec.name), spec.name, -1});
      } else {
        for (int q = spec.lo; q <= spec.hi; ++q) out.push_back({indexed_member(spec.name, q), spec.name, q});
      }
      break;
    case GraphFamilySpec::Kind::File:
      for (auto& g : read_graph_file(spec.path, spec.format)) out.push_back({std::move(g), "file", -1});
      break;
  }
  return out;
}

void to_json(nlohmann::json& j, const CheckReport& r) {
  auto failures = nlohmann::json::array();
  for (const auto& f : r.failures) failures.push_back({{"graph6", f.graph6}, {"detail", f.detail}});
  j = {{"name", r.name},
       {"instances_tested", r.instances_tested},
       {"failures", failures},
       {"elapsed_ms", r.elapsed_ms},
       {"pass", r.pass}};
  if (r.expect_failure) j["expect_failure"] = true;
}

void to_json(nlohmann::json& j, const InstanceRecord& r) {
  j = {{"check", r.check}, {"index", r.index}, {"graph6", r.graph6}, {"ok", r.ok}, {"detail", r.detail}};
}

const std::vector<CheckInfo>& registered_checks() {
  static const std::vector<CheckInfo> checks = {
      {"chain-inequality", "lambda-tw <= lambda-pw <= lambda-td <= lambda-vc + 1, both cost kinds", {"all:1-7"}, {}},
      {"ramsey-binding", "rho(G) <= R(omega+1, alpha-rho+1) - 1 for rho in vc, fvs, tw, pw, td", {"all:1-6"}, {}},
      {"sclaw-increment",
       "alpha-pw(s(G)) = alpha-pw(G)+1, alpha-td(p5(G)) = alpha-td(G)+1, alpha-pw(net(G)) = alpha-pw(G)+1",
       {"all:1-3", "random:n=4,p=0.5,seed=41,count=20"},
       {}},
      {"gamma-witness", "alpha-pw(S_n) = n, td(S_n) <= 2 omega(S_n), S_n chordal and {P6,C4,C5,C6}-free",
       {"named:S:1-3"}, {}},
      {"modulator-slack", "lambda-rho(G) <= lambda-mu_{rho,c}(G) + c",
       {"all:1-6"},
       {"omega:0", "omega:1", "omega:2", "chi:0", "chi:1", "chi:2", "tw:0", "tw:1", "tw:2", "pw:0", "pw:1", "pw:2",
        "td:0", "td:1", "td:2"}},
      {"modulator-minimality", "mu_{rho,c}(G[(V-S) u I]) >= |I| for minimum modulators S, maximum independent I in S",
       {"all:1-6"}, {"tw:1", "tw:2", "chi:2"}},
      {"modulator-identities", "mu_{tw,1} = vc, mu_{tw,2} = fvs, mu_{chi,2} = oct, mu_{td,1} = vc", {"all:1-6"}, {}},
      {"mwis-equivalence", "MWIS through a bounded-alpha odd cycle transversal matches the exact optimum",
       {"all:1-7", "random:n=1-14,p=0.5,seed=7,count=200", "random-bipartite:n=1-16,p=0.5,seed=9,count=200"},
       {}},
      {"fvs-alpha-tw-bound", "alpha-tw(G) <= alpha(G[S]) + 1 for a minimum feedback vertex set S", {"all:1-6"}, {}},
      {"delta-not-inheritable", "Delta(G) > mu_{Delta,0}(G) on stars", {"named:star:2-8"}, {}},
      {"td-path-formula", "td(P_n) = ceil(log2(n+1))", {"named:P:1-15"}, {}},
      {"nk2-knn-witness", "vc(nK2) = vc(K_{n,n}) = n and omega = 2", {"named:nK2:1-5", "named:Knn:1-5"}, {}},
      {"alpha-chi-nkn", "alpha-chi(K_s) = 1 and alpha-chi(nK_n) >= n", {"named:K:1-5", "named:nKn:1-3"}, {}},
      {"iso-invariance", "every parameter is unchanged under relabeling", {"all:1-6"}, {}},
  };
  return checks;
}

bool is_registered_check(std::string_view name) {
  const auto& checks = registered_checks();
  return std::any_of(checks.begin(), checks.end(), [&](const CheckInfo& c) { return c.name == name; });
}

SuiteConfig load_suite_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("malformed config file " + path + ": " + e.what());
  }
  SuiteConfig cfg;
  if (j.contains("budgets")) from_json(j.at("budgets"), cfg.budgets);
  if (j.contains("checks")) {
    for (const auto& [name, entry] : j.at("checks").items()) {
      if (!is_registered_check(name)) throw std::invalid_argument("config names unknown check '" + name + "'");
      if (entry.contains("families")) cfg.defaults.families[name] = entry.at("families").get<std::vector<std::string>>();
      if (entry.contains("modulators")) {
        cfg.defaults.modulators[name] = entry.at("modulators").get<std::vector<std::string>>();
      }
    }
  }
  return cfg;
}

CheckSpec with_defaults(CheckSpec spec, const CheckDefaults& defaults) {
  const auto& checks = registered_checks();
  auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckInfo& c) { return c.name == spec.name; });
  if (it == checks.end()) throw std::invalid_argument("unknown check '" + spec.name + "'");
  if (spec.families.empty()) {
    auto f = defaults.families.find(spec.name);
    for (const auto& text : f != defaults.families.end() ? f->second : it->default_families) {
      spec.families.push_back(parse_family(text));
    }
  }
  if (spec.modulators.empty()) {
    auto m = defaults.modulators.find(spec.name);
    for (const auto& text : m != defaults.modulators.end() ? m->second : it->default_modulators) {
      spec.modulators.push_back(parse_modulator_spec(text));
    }
  }
  if (spec.max_n > 0) {
    for (auto& f : spec.families) {
      const bool ranged = f.kind == GraphFamilySpec::Kind::EnumerateAll ||
                          (f.kind == GraphFamilySpec::Kind::Named && f.lo >= 0);
      if (!ranged) continue;
      if (f.kind == GraphFamilySpec::Kind::EnumerateAll && spec.max_n > kMaxEnumerationOrder) {
        throw BudgetExceeded("enumeration supports at most " + std::to_string(kMaxEnumerationOrder) + " vertices");
      }
      f.hi = spec.max_n;
      f.lo = std::min(f.lo, f.hi);
    }
  }
  return spec;
}

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string num(long long v) { return std::to_string(v); }

std::string kind_name(CostKind k) { return std::string(to_string(k)); }

Outcome chain_inequality(const FamilyMember& m, const CheckSpec& spec) {
  Outcome out;
  const Graph& g = m.graph;
  for (CostKind kind : spec.kinds) {
    const auto k = kind_name(kind);
    auto tw = lambda_treewidth(g, kind, spec.budgets);
    auto pw = lambda_pathwidth(g, kind, spec.budgets);
    auto td = lambda_treedepth(g, kind, spec.budgets);
    auto vc = lambda_vertex_cover(g, kind, spec.budgets);
    if (!validate_tree_decomposition(g, tw.witness).empty() || cost(g, tw.witness, kind) != tw.value) {
      out.fail(k + "-tw witness does not realize its value");
    }
    if (!validate_path_decomposition(g, pw.witness).empty() || cost(g, pw.witness, kind) != pw.value) {
      out.fail(k + "-pw witness does not realize its value");
    }
    if (!validate_treedepth_decomposition(g, td.witness).empty() || cost(g, td.witness, kind) != td.value) {
      out.fail(k + "-td witness does not realize its value");
    }
    if (cost(g, path_decomp_from_treedepth(g, td.witness), kind) > td.value) {
      out.fail(k + ": DFS path decomposition of the td witness costs more than the forest");
    }
    if (cost(g, td_decomp_from_vertex_cover(g, vc.witness), kind) > vc.value + 1) {
      out.fail(k + ": forest built from the vc witness costs more than lambda-vc + 1");
    }
    if (!(tw.value <= pw.value && pw.value <= td.value && td.value <= vc.value + 1)) {
      out.fail(k + ": tw=" + num(tw.value) + " pw=" + num(pw.value) + " td=" + num(td.value) +
               " vc=" + num(vc.value) + " breaks tw <= pw <= td <= vc+1");
    }
  }
  return out;
}

Outcome ramsey_binding(const FamilyMember& m, const CheckSpec& spec) {
  Outcome out;
  const Graph& g = m.graph;
  const int omega = clique_number(g);
  const auto& b = spec.budgets;
  constexpr auto C = CostKind::Cardinality;
  constexpr auto A = CostKind::Independence;
  const std::pair<const char*, std::pair<int, int>> rows[] = {
      {"vc", {lambda_vertex_cover(g, C, b).value, lambda_vertex_cover(g, A, b).value}},
      {"fvs", {lambda_feedback_vertex_set(g, C, b).value, lambda_feedback_vertex_set(g, A, b).value}},
      {"tw", {lambda_treewidth(g, C, b).value, lambda_treewidth(g, A, b).value}},
      {"pw", {lambda_pathwidth(g, C, b).value, lambda_pathwidth(g, A, b).value}},
      {"td", {lambda_treedepth(g, C, b).value, lambda_treedepth(g, A, b).value}},
  };
  for (const auto& [name, vals] : rows) {
    const auto bound = binding_f(omega, vals.second);
    if (vals.first > bound) {
      out.fail(std::string(name) + "=" + num(vals.first) + " exceeds f(omega=" + num(omega) + ", alpha-" + name +
               "=" + num(vals.second) + ") = " + num(bound));
    }
  }
  return out;
}

// α-pw(g) == target, falling back to the decision search on larger graphs.
bool alpha_pw_is(const Graph& g, int target, const Budgets& b) {
  constexpr auto A = CostKind::Independence;
  if (g.order() <= b.pathwidth_exact) return lambda_pathwidth(g, A, b).value == target;
  return lambda_pw_at_most(g, A, target, b) && (target <= 1 || !lambda_pw_at_most(g, A, target - 1, b));
}

bool alpha_td_is(const Graph& g, int target, const Budgets& b) {
  constexpr auto A = CostKind::Independence;
  if (g.order() <= b.treedepth_exact) return lambda_treedepth(g, A, b).value == target;
  return lambda_td_at_most(g, A, target, b) && (target <= 1 || !lambda_td_at_most(g, A, target - 1, b));
}

Outcome sclaw_increment(const FamilyMember& m, const CheckSpec& spec) {
  Outcome out;
  const Graph& g = m.graph;
  constexpr auto A = CostKind::Independence;
  for (auto kind : spec.substitutions) {
    const Graph h = substitute(g, kind);
    if (kind == SubstitutionKind::P5) {
      const int base = lambda_treedepth(g, A, spec.budgets).value;
      if (!alpha_td_is(h, base + 1, spec.budgets)) {
        out.fail("p5: alpha-td(G)=" + num(base) + " but alpha-td(p5(G)) != " + num(base + 1));
      }
    } else {
      const int base = lambda_pathwidth(g, A, spec.budgets).value;
      if (!alpha_pw_is(h, base + 1, spec.budgets)) {
        out.fail(std::string(to_string(kind)) + ": alpha-pw(G)=" + num(base) + " but alpha-pw of the substitution != " +
                 num(base + 1));
      }
    }
  }
  return out;
}

Outcome gamma_witness(const FamilyMember& m, const CheckSpec& spec) {
  Outcome out;
  if (m.family != "S") {
    out.fail("gamma-witness needs members of the named:S family");
    return out;
  }
  const Graph& g = m.graph;
  const int n = m.param;
  long long expected_order = 1;
  for (int i = 2; i <= n; ++i) expected_order = 3 * expected_order + 4;
  if (g.order() != expected_order) out.fail("order " + num(g.order()) + " != " + num(expected_order));
  const int omega = clique_number(g);
  if (omega != n) out.fail("omega = " + num(omega) + " != " + num(n));
  if (!is_chordal(g)) out.fail("not chordal");
  const std::pair<const char*, Graph> forbidden[] = {
      {"P6", path_graph(6)}, {"C4", cycle_graph(4)}, {"C5", cycle_graph(5)}, {"C6", cycle_graph(6)}};
  for (const auto& [name, h] : forbidden)
    if (contains_induced(g, h)) out.fail(std::string("contains an induced ") + name);
  if (is_chordal(g) && cost(g, chordal_clique_tree(g), CostKind::Independence) != 1) {
    out.fail("clique tree has alpha-cost != 1");
  }
  if (!lambda_td_at_most(g, CostKind::Cardinality, 2 * omega, spec.budgets)) {
    out.fail("td > 2 omega = " + num(2 * omega));
  }
  if (!alpha_pw_is(g, n, spec.budgets)) out.fail("alpha-pw != " + num(n));
  return out;
}

Outcome modulator_slack(const FamilyMember& m, const CheckSpec& spec) {
  Outcome out;
  for (const auto& mod : spec.modulators) {
    for (CostKind kind : spec.kinds) {
      auto r = check_modulator_slack(m.graph, mod, kind, spec.budgets);
      if (!r.ok) out.fail(r.detail);
    }
  }
  return out;
}

Outcome modulator_minimality(const FamilyMember& m, const CheckSpec& spec) {
  Outcome out;
  for (const auto& mod : spec.modulators) {
    auto r = check_modulator_minimality(m.graph, mod, spec.budgets);
    if (!r.ok) out.fail(to_string(mod) + ": " + r.detail);
  }
  return out;
}

Outcome modulator_identities(const FamilyMember& m, const CheckSpec& spec) {
  Outcome out;
  const Graph& g = m.graph;
  const auto& b = spec.budgets;
  constexpr auto C = CostKind::Cardinality;
  const auto vc = vertex_cover_number(g, b);
  const auto fvs = feedback_vertex_number(g, b);
  const auto oct = oct_number(g, b);
  if (!g.is_independent(g.vertices() - vc.witness)) out.fail("vc witness is not a vertex cover");
  if (!is_acyclic(g, g.vertices() - fvs.witness)) out.fail("fvs witness leaves a cycle");
  if (!is_bipartite(g.without(oct.witness))) out.fail("oct witness leaves an odd cycle");
  const std::tuple<const char*, ModulatorSpec, int> rows[] = {
      {"vc", {TargetParam::Treewidth, 1}, vc.value},
      {"fvs", {TargetParam::Treewidth, 2}, fvs.value},
      {"oct", {TargetParam::Chromatic, 2}, oct.value},
      {"vc", {TargetParam::Treedepth, 1}, vc.value},
  };
  for (const auto& [name, mod, want] : rows) {
    const int got = modulator_number(g, mod, C, b).value;
    if (got != want) out.fail("mu(" + to_string(mod) + ") = " + num(got) + " != " + name + " = " + num(want));
  }
  return out;
}

Outcome mwis_equivalence(const FamilyMember& m, long long index, const CheckSpec& spec) {
  Outcome out;
  const Graph& g = m.graph;
  const int n = g.order();
  const auto oct = find_oct_with_bounded_alpha(g, n, spec.budgets);
  const int k = independence_number(g.induced(*oct));
  const bool bip = is_bipartite(g);
  for (int round = 0; round < spec.weight_rounds; ++round) {
    std::mt19937_64 rng(mix(spec.seed ^ mix(static_cast<std::uint64_t>(index) * 131 + round)));
    std::vector<std::int64_t> w(static_cast<std::size_t>(n));
    for (auto& x : w) x = static_cast<std::int64_t>(rng() % 101);
    WeightedGraph wg(g, w);
    const auto exact = mwis_exact(wg, spec.budgets);
    const auto via = mwis_via_oct(wg, k, spec.budgets);
    const std::string tag = "round " + num(round) + ": ";
    auto sane = [&](const MwisResult& r, const char* who) {
      if (!g.is_independent(r.set) || wg.weight_of(r.set) != r.weight) {
        out.fail(tag + who + " returned an inconsistent set");
      }
    };
    sane(exact, "exact");
    sane(via, "oct");
    if (via.weight != exact.weight) {
      out.fail(tag + "oct (k=" + num(k) + ") weight " + num(via.weight) + " != exact " + num(exact.weight));
    }
    if (bip) {
      const auto flow = mwis_bipartite(wg);
      sane(flow, "bipartite");
      if (flow.weight != exact.weight) {
        out.fail(tag + "bipartite weight " + num(flow.weight) + " != exact " + num(exact.weight));
      }
    }
  }
  return out;
}

Outcome fvs_alpha_tw_bound(const FamilyMember& m, const CheckSpec& spec) {
  Outcome out;
  const Graph& g = m.graph;
  constexpr auto A = CostKind::Independence;
  const auto s = feedback_vertex_number(g, spec.budgets).witness;
  const auto td = tree_decomp_from_fvs(g, s);
  if (!validate_tree_decomposition(g, td).empty()) {
    out.fail("decomposition from the fvs does not validate");
    return out;
  }
  const int alpha_s = independence_number(g.induced(s));
  const int built = cost(g, td, A);
  const int tw = lambda_treewidth(g, A, spec.budgets).value;
  if (built > alpha_s + 1) out.fail("fvs decomposition costs " + num(built) + " > alpha(G[S]) + 1 = " + num(alpha_s + 1));
  if (tw > alpha_s + 1) out.fail("alpha-tw = " + num(tw) + " > alpha(G[S]) + 1 = " + num(alpha_s + 1));
  return out;
}

Outcome delta_not_inheritable(const FamilyMember& m, const CheckSpec& spec) {
  Outcome out;
  const int delta = max_degree(m.graph);
  const int mu = modulator_number(m.graph, {TargetParam::MaxDegree, 0}, CostKind::Cardinality, spec.budgets).value;
  if (delta <= mu) out.fail("no violation: Delta = " + num(delta) + " <= mu_{delta,0} = " + num(mu));
  return out;
}

int ceil_log2(int x) { return x <= 1 ? 0 : std::bit_width(static_cast<unsigned>(x - 1)); }

Outcome td_path_formula(const FamilyMember& m, const CheckSpec& spec) {
  Outcome out;
  if (m.family != "P") {
    out.fail("td-path-formula needs members of the named:P family");
    return out;
  }
  const int want = ceil_log2(m.param + 1);
  constexpr auto C = CostKind::Cardinality;
  int got = -1;
  if (m.graph.order() <= spec.budgets.treedepth_exact) {
    got = lambda_treedepth(m.graph, C, spec.budgets).value;
  } else if (lambda_td_at_most(m.graph, C, want, spec.budgets)) {
    got = want > 0 && lambda_td_at_most(m.graph, C, want - 1, spec.budgets) ? want - 1 : want;
  }
  if (got != want) out.fail("td(P" + num(m.param) + ") = " + num(got) + " != " + num(want));
  return out;
}

Outcome nk2_knn_witness(const FamilyMember& m, const CheckSpec& spec) {
  Outcome out;
  if (m.family != "nK2" && m.family != "Knn") {
    out.fail("nk2-knn-witness needs members of the named:nK2 or named:Knn family");
    return out;
  }
  const int vc = vertex_cover_number(m.graph, spec.budgets).value;
  const int omega = clique_number(m.graph);
  if (vc != m.param) out.fail("vc = " + num(vc) + " != " + num(m.param));
  if (m.param >= 1 && omega != 2) out.fail("omega = " + num(omega) + " != 2");
  return out;
}

Outcome alpha_chi_nkn(const FamilyMember& m, const CheckSpec& spec) {
  Outcome out;
  const auto r = alpha_chromatic(m.graph, spec.budgets);
  if (m.family == "K") {
    if (m.param >= 1 && r.value != 1) out.fail("alpha-chi(K" + num(m.param) + ") = " + num(r.value) + " != 1");
  } else if (m.family == "nKn") {
    if (r.value < m.param) out.fail("alpha-chi = " + num(r.value) + " < n = " + num(m.param));
    if (r.value > independence_number(m.graph)) out.fail("alpha-chi exceeds alpha");
  } else {
    out.fail("alpha-chi-nkn needs members of the named:K or named:nKn family");
  }
  return out;
}

std::vector<long long> fingerprint(const Graph& g, const Budgets& b) {
  std::vector<long long> f;
  for (const auto& name : parameter_names()) {
    for (CostKind kind : kBothKinds) {
      if (kind == CostKind::Independence && (name == "alpha" || name == "matching")) continue;
      if (name == "chi" && kind == CostKind::Independence && g.order() > b.alpha_chromatic) continue;
      f.push_back(evaluate_parameter(g, {name, kind}, b).value);
    }
  }
  f.push_back(is_bipartite(g));
  f.push_back(is_chordal(g));
  f.push_back(static_cast<long long>(canonical_code(g)));
  return f;
}

Outcome iso_invariance(const FamilyMember& m, long long index, const CheckSpec& spec) {
  Outcome out;
  const auto base = fingerprint(m.graph, spec.budgets);
  for (int r = 0; r < spec.relabelings; ++r) {
    const auto perm = random_permutation(m.graph.order(), mix(spec.seed ^ mix(static_cast<std::uint64_t>(index) * 97 + r)));
    if (fingerprint(m.graph.permuted(perm), spec.budgets) != base) {
      std::string p;
      for (int x : perm) p += (p.empty() ? "" : ",") + num(x);
      out.fail("values change under relabeling [" + p + "]");
    }
  }
  return out;
}

Outcome evaluate(const std::string& name, const FamilyMember& m, long long index, const CheckSpec& spec) {
  if (name == "chain-inequality") return chain_inequality(m, spec);
  if (name == "ramsey-binding") return ramsey_binding(m, spec);
  if (name == "sclaw-increment") return sclaw_increment(m, spec);
  if (name == "gamma-witness") return gamma_witness(m, spec);
  if (name == "modulator-slack") return modulator_slack(m, spec);
  if (name == "modulator-minimality") return modulator_minimality(m, spec);
  if (name == "modulator-identities") return modulator_identities(m, spec);
  if (name == "mwis-equivalence") return mwis_equivalence(m, index, spec);
  if (name == "fvs-alpha-tw-bound") return fvs_alpha_tw_bound(m, spec);
  if (name == "delta-not-inheritable") return delta_not_inheritable(m, spec);
  if (name == "td-path-formula") return td_path_formula(m, spec);
  if (name == "nk2-knn-witness") return nk2_knn_witness(m, spec);
  if (name == "alpha-chi-nkn") return alpha_chi_nkn(m, spec);
  if (name == "iso-invariance") return iso_invariance(m, index, spec);
  throw std::invalid_argument("unknown check '" + name + "'");
}

}  // namespace

CheckReport run_check(const CheckSpec& spec, const std::function<void(const InstanceRecord&)>& on_instance) {
  if (!is_registered_check(spec.name)) throw std::invalid_argument("unknown check '" + spec.name + "'");
  const auto start = std::chrono::steady_clock::now();
  std::vector<FamilyMember> members;
  for (const auto& fam : spec.families)
    for (auto& m : materialize(fam)) members.push_back(std::move(m));
  const auto count = static_cast<std::int64_t>(members.size());
  std::vector<Outcome> outcomes(members.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(spec.jobs, 1))
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      outcomes[i] = evaluate(spec.name, members[i], i, spec);
    } catch (const BudgetExceeded& e) {
      outcomes[i] = {false, std::string("budget exceeded: ") + e.what()};
    } catch (const std::exception& e) {
      outcomes[i] = {false, std::string("error: ") + e.what()};
    }
  }
  CheckReport report;
  report.name = spec.name;
  report.instances_tested = count;
  report.expect_failure = spec.expect_failure;
  for (std::int64_t i = 0; i < count; ++i) {
    const std::string g6 = to_graph6(members[i].graph);
    if (on_instance) on_instance({spec.name, i, g6, outcomes[i].ok, outcomes[i].detail});
    if (!outcomes[i].ok) report.failures.push_back({g6, outcomes[i].detail});
  }
  report.pass = spec.expect_failure ? !report.failures.empty() : report.failures.empty();
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace alphawidth
