#include "alphawidth/params.hpp"

#include <algorithm>
#include <stdexcept>

#include "alphawidth/base_params.hpp"
#include "alphawidth/modulators.hpp"
#include "alphawidth/widths.hpp"

namespace alphawidth {

namespace {

const std::vector<std::string> kNames = {"order", "alpha", "omega", "chi", "delta", "matching", "vc",
                                         "fvs",   "oct",   "degeneracy", "tw", "pw", "td"};

bool has_independence_variant(std::string_view base) { return base != "alpha" && base != "matching"; }

nlohmann::json set_json(const VertexSet& s) { return s.to_vector(); }

}  // namespace

ParameterName parse_parameter(std::string_view name, CostKind kind) {
  ParameterName p{std::string(name), kind};
  if (name.starts_with("alpha-")) {
    p.base = std::string(name.substr(6));
    p.kind = CostKind::Independence;
  }
  if (std::find(kNames.begin(), kNames.end(), p.base) == kNames.end()) {
    throw std::invalid_argument("unknown parameter '" + std::string(name) + "'");
  }
  if (p.kind == CostKind::Independence && !has_independence_variant(p.base)) {
    throw std::invalid_argument("parameter '" + p.base + "' has no independence variant");
  }
  return p;
}

std::vector<std::string> parameter_names() { return kNames; }

ParameterValue evaluate_parameter(const Graph& g, const ParameterName& p, const Budgets& budgets) {
  const bool card = p.kind == CostKind::Cardinality;
  ParameterValue out;
  const std::string& b = p.base;
  if (b == "order") {
    if (card) {
      out.value = g.order();
    } else {
      auto s = maximum_independent_set(g);
      out.value = s.size();
      out.witness = set_json(s);
    }
  } else if (b == "alpha") {
    auto s = maximum_independent_set(g);
    out.value = s.size();
    out.witness = set_json(s);
  } else if (b == "omega") {
    if (card) {
      auto s = maximum_clique(g);
      out.value = s.size();
      out.witness = set_json(s);
    } else {
      out.value = g.order() == 0 ? 0 : 1;
    }
  } else if (b == "chi") {
    if (card) {
      std::vector<int> coloring;
      out.value = chromatic_number(g, &coloring);
      out.witness = coloring;
    } else {
      auto r = alpha_chromatic(g, budgets);
      out.value = r.value;
      out.witness = r.witness;
    }
  } else if (b == "delta") {
    out.value = card ? max_degree(g) : (g.order() == 0 ? 0 : local_independence_number(g));
  } else if (b == "matching") {
    out.value = max_matching_size(g);
  } else if (b == "vc" || b == "fvs" || b == "oct") {
    ModulatorResult r;
    if (b == "vc") {
      r = lambda_vertex_cover(g, p.kind, budgets);
    } else if (b == "fvs") {
      r = lambda_feedback_vertex_set(g, p.kind, budgets);
    } else {
      r = card ? oct_number(g, budgets) : modulator_number(g, {TargetParam::Chromatic, 2}, p.kind, budgets);
    }
    out.value = r.value;
    out.witness = set_json(r.witness);
  } else if (b == "degeneracy") {
    auto r = degeneracy(g, p.kind);
    out.value = r.value;
    out.witness = r.witness;
  } else if (b == "tw") {
    auto r = lambda_treewidth(g, p.kind, budgets);
    out.value = r.value;
    out.witness = r.witness;
  } else if (b == "pw") {
    auto r = lambda_pathwidth(g, p.kind, budgets);
    out.value = r.value;
    out.witness = r.witness;
  } else if (b == "td") {
    auto r = lambda_treedepth(g, p.kind, budgets);
    out.value = r.value;
    out.witness = r.witness;
  }
  return out;
}

}  // namespace alphawidth
