#pragma once

#include <optional>
#include <vector>

#include "alphawidth/graph.hpp"

namespace alphawidth {

/// Answers α(G[X]) queries for a fixed host graph. Holds the complement
/// adjacency so repeated bag evaluations avoid rebuilding subgraphs.
class IndependenceOracle {
 public:
  explicit IndependenceOracle(const Graph& g);

  int alpha(const VertexSet& x) const;
  /// Lexicographically smallest maximum independent set of G[X].
  VertexSet maximum_independent_set(const VertexSet& x) const;

  const Graph& graph() const { return *graph_; }

 private:
  const Graph* graph_;
  std::vector<VertexSet> co_adj_;
};

/// α(G); 0 for the null graph.
int independence_number(const Graph& g);
VertexSet maximum_independent_set(const Graph& g);
/// ω(G); 0 for the null graph.
int clique_number(const Graph& g);
/// Lexicographically smallest maximum clique.
VertexSet maximum_clique(const Graph& g);

/// Exact χ(G). If coloring is given it receives a proper coloring with
/// colors 0..χ-1.
int chromatic_number(const Graph& g, std::vector<int>* coloring = nullptr);

int max_degree(const Graph& g);

/// max over v of α(G[N(v)]), the largest induced star. Throws
/// std::invalid_argument on the null graph.
int local_independence_number(const Graph& g);

/// 2-coloring (0/1 per vertex) if g is bipartite.
std::optional<std::vector<int>> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

/// Perfect elimination order (simplicial vertices first) if g is chordal.
std::optional<std::vector<int>> perfect_elimination_order(const Graph& g);
bool is_chordal(const Graph& g);

/// Whether some induced subgraph of g is isomorphic to h.
bool contains_induced(const Graph& g, const Graph& h);

int max_matching_size(const Graph& g);

/// Connected components of G[within], ordered by smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within);
std::vector<VertexSet> connected_components(const Graph& g);

/// Whether G[within] has no cycle.
bool is_acyclic(const Graph& g, const VertexSet& within);

}  // namespace alphawidth
