#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "alphawidth/budgets.hpp"
#include "alphawidth/decomposition.hpp"
#include "alphawidth/graph.hpp"

namespace alphawidth {

enum class TargetParam { Treewidth, Pathwidth, Treedepth, Chromatic, Clique, MaxDegree };

TargetParam parse_target_param(std::string_view name);
std::string_view to_string(TargetParam rho);

struct ModulatorSpec {
  TargetParam rho = TargetParam::Treewidth;
  int c = 0;

  friend bool operator==(const ModulatorSpec&, const ModulatorSpec&) = default;
};

/// "tw:1", "chi:2", "delta:0", ...
ModulatorSpec parse_modulator_spec(std::string_view text);
std::string to_string(const ModulatorSpec& spec);

/// ρ(G) (cardinality version; widths count bag sizes).
int target_value(const Graph& g, TargetParam rho, const Budgets& budgets = {});
/// ρ(G) <= c, using linear-time tests where c makes them available.
bool target_at_most(const Graph& g, TargetParam rho, int c, const Budgets& budgets = {});
/// λ-ρ(G): the λ-variant of the target (α-ω is 1 on non-null graphs, the α
/// version of Δ is the local independence number).
int lambda_target_value(const Graph& g, TargetParam rho, CostKind kind, const Budgets& budgets = {});

struct ModulatorResult {
  int value = 0;
  VertexSet witness;
};

/// min λ(G, S) over (ρ, c)-modulators S; the witness is the smallest set in
/// (λ, size, lex) order.
ModulatorResult modulator_number(const Graph& g, const ModulatorSpec& spec, CostKind kind,
                                 const Budgets& budgets = {});
/// Every minimum-cardinality (ρ, c)-modulator in lex order. Throws
/// BudgetExceeded past budgets.minimality_cap sets.
std::vector<VertexSet> minimum_modulators(const Graph& g, const ModulatorSpec& spec, const Budgets& budgets = {});

/// Lex-smallest minimum vertex cover.
ModulatorResult vertex_cover_number(const Graph& g, const Budgets& budgets = {});
/// Lex-smallest minimum feedback vertex set.
ModulatorResult feedback_vertex_number(const Graph& g, const Budgets& budgets = {});
/// Lex-smallest minimum odd cycle transversal.
ModulatorResult oct_number(const Graph& g, const Budgets& budgets = {});
/// min λ(G, C) over vertex covers C; min λ(G, S) over feedback vertex sets.
ModulatorResult lambda_vertex_cover(const Graph& g, CostKind kind, const Budgets& budgets = {});
ModulatorResult lambda_feedback_vertex_set(const Graph& g, CostKind kind, const Budgets& budgets = {});

/// C(a+b-2, a-1). Throws std::overflow_error if the result does not fit.
std::int64_t ramsey_upper(int a, int b);
/// ramsey_upper(p+1, k+1) - 1. Accepts p, k >= 0.
std::int64_t binding_f(int p, int k);

/// Whether every labeled graph on n vertices has a clique of size a or an
/// independent set of size b. Serial reference; n <= 7.
bool ramsey_property_check(int n, int a, int b);
/// Same answer with the labeled graphs split across OpenMP threads.
bool ramsey_property_check_parallel(int n, int a, int b, int threads = 0);

struct InvariantCheck {
  bool ok = true;
  std::string detail;
  /// Largest |I| examined (minimality) or the two sides of the inequality
  /// (slack: lhs <= rhs).
  int lhs = 0;
  int rhs = 0;
};

/// For every minimum (ρ, c)-modulator S and every maximum independent set I
/// of G[S], checks μ_{ρ,c}(G[(V - S) ∪ I]) >= |I|.
InvariantCheck check_modulator_minimality(const Graph& g, const ModulatorSpec& spec, const Budgets& budgets = {});
/// λ-ρ(G) <= λ-μ_{ρ,c}(G) + c.
InvariantCheck check_modulator_slack(const Graph& g, const ModulatorSpec& spec, CostKind kind,
                                 const Budgets& budgets = {});

}  // namespace alphawidth
