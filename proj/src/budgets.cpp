#include "alphawidth/budgets.hpp"

#include <fstream>
#include <stdexcept>

namespace alphawidth {

#define AW_BUDGET_FIELDS(X)                                                                            \
  X(treewidth_card) X(treewidth_alpha) X(pathwidth_exact) X(pathwidth_decision) X(treedepth_exact)    \
      X(treedepth_decision) X(alpha_chromatic) X(modulator_generic) X(modulator_special)               \
          X(oct_alpha_search) X(mwis_exact) X(minimality_cap) X(search_nodes)

void to_json(nlohmann::json& j, const Budgets& b) {
  j = nlohmann::json::object();
#define X(f) j[#f] = b.f;
  AW_BUDGET_FIELDS(X)
#undef X
}

void from_json(const nlohmann::json& j, Budgets& b) {
  if (!j.is_object()) throw std::invalid_argument("budgets must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
#define X(f)                     \
  if (key == #f) {               \
    value.get_to(b.f);           \
    known = true;                \
  }
    AW_BUDGET_FIELDS(X)
#undef X
    if (!known) throw std::invalid_argument("unknown budget key '" + key + "'");
  }
}

Budgets load_budgets(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open budget file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("malformed budget file " + path + ": " + e.what());
  }
  Budgets b;
  if (j.contains("budgets")) {
    from_json(j.at("budgets"), b);
  } else {
    from_json(j, b);
  }
  return b;
}

}  // namespace alphawidth
