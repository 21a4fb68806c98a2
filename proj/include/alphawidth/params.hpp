#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "alphawidth/budgets.hpp"
#include "alphawidth/decomposition.hpp"
#include "alphawidth/graph.hpp"

namespace alphawidth {

/// A parameter name plus its cost kind. "alpha-tw" and ("tw", independence)
/// name the same thing.
struct ParameterName {
  std::string base;
  CostKind kind = CostKind::Cardinality;
};

/// Accepts an "alpha-" prefix, which selects the independence kind. Throws
/// std::invalid_argument for unknown names.
ParameterName parse_parameter(std::string_view name, CostKind kind);
std::vector<std::string> parameter_names();

struct ParameterValue {
  int value = 0;
  /// Decomposition, vertex set, order or coloring, depending on the
  /// parameter; null when none applies.
  nlohmann::json witness;
};

ParameterValue evaluate_parameter(const Graph& g, const ParameterName& p, const Budgets& budgets = {});

}  // namespace alphawidth
