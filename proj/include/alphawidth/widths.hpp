#pragma once

#include <optional>
#include <vector>

#include "alphawidth/budgets.hpp"
#include "alphawidth/decomposition.hpp"
#include "alphawidth/graph.hpp"

namespace alphawidth {

template <class Witness>
struct WidthResult {
  int value = 0;
  Witness witness;
  CostKind kind = CostKind::Cardinality;
};

/// Exact λ-treewidth (largest bag λ, so cardinality treewidth is classical
/// treewidth + 1). Subset DP over elimination orders; the witness is the
/// compressed decomposition of the optimal order.
WidthResult<TreeDecomposition> lambda_treewidth(const Graph& g, CostKind kind, const Budgets& budgets = {});

/// Exact λ-pathwidth by DP over prefix sets of a vertex order.
WidthResult<PathDecomposition> lambda_pathwidth(const Graph& g, CostKind kind, const Budgets& budgets = {});
/// A path decomposition of λ-cost at most k, or none. Depth-first search over
/// prefix sets with memoized dead ends.
std::optional<PathDecomposition> find_path_decomposition(const Graph& g, CostKind kind, int k,
                                                         const Budgets& budgets = {});
bool lambda_pw_at_most(const Graph& g, CostKind kind, int k, const Budgets& budgets = {});

/// Exact λ-treedepth: recursion over (component, ancestor set), memoized.
WidthResult<RootedForest> lambda_treedepth(const Graph& g, CostKind kind, const Budgets& budgets = {});
std::optional<RootedForest> find_treedepth_decomposition(const Graph& g, CostKind kind, int k,
                                                         const Budgets& budgets = {});
bool lambda_td_at_most(const Graph& g, CostKind kind, int k, const Budgets& budgets = {});

/// Degeneracy (cardinality) or inductive independence number (independence)
/// by greedy peeling; the witness is the deletion order.
WidthResult<std::vector<int>> degeneracy(const Graph& g, CostKind kind);

/// min over proper colorings of the largest rainbow independent set. The
/// witness is an optimal coloring (colors in first-occurrence order).
WidthResult<std::vector<int>> alpha_chromatic(const Graph& g, const Budgets& budgets = {});

}  // namespace alphawidth
