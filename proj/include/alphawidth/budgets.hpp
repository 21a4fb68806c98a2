#pragma once

#include <string>

#include <json.hpp>

namespace alphawidth {

/// Largest inputs each exact solver accepts. Exceeding one raises
/// BudgetExceeded.
struct Budgets {
  int treewidth_card = 16;
  int treewidth_alpha = 16;
  int pathwidth_exact = 16;
  int pathwidth_decision = 25;
  int treedepth_exact = 14;
  int treedepth_decision = 30;
  int alpha_chromatic = 9;
  int modulator_generic = 16;
  int modulator_special = 30;
  int oct_alpha_search = 20;
  int mwis_exact = 30;
  long long minimality_cap = 100000;
  /// Node cap for the decision searches (pathwidth and treedepth).
  long long search_nodes = 50000000;
};

void to_json(nlohmann::json& j, const Budgets& b);
/// Missing keys keep their defaults; unknown keys are rejected.
void from_json(const nlohmann::json& j, Budgets& b);

Budgets load_budgets(const std::string& path);

}  // namespace alphawidth
