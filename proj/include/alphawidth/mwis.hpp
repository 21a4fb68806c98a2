#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "alphawidth/budgets.hpp"
#include "alphawidth/graph.hpp"

namespace alphawidth {

struct FlowResult {
  std::int64_t value = 0;
  /// Nodes reachable from the source in the final residual network.
  std::vector<bool> source_side;
};

/// Directed network with integer capacities.
class FlowNetwork {
 public:
  struct Arc {
    int to;
    std::int64_t cap;
    /// Index of the paired reverse arc in adjacency(to).
    int rev;
  };

  FlowNetwork(int nodes, int source, int sink);

  /// Throws std::invalid_argument on a negative capacity, an out-of-range
  /// node, an arc into the source or an arc out of the sink.
  void add_arc(int from, int to, std::int64_t cap);

  int nodes() const { return static_cast<int>(adj_.size()); }
  int source() const { return source_; }
  int sink() const { return sink_; }
  const std::vector<Arc>& adjacency(int v) const { return adj_[v]; }

 private:
  friend FlowResult max_flow(FlowNetwork net);
  std::vector<std::vector<Arc>> adj_;
  int source_;
  int sink_;
};

/// Dinic's algorithm.
FlowResult max_flow(FlowNetwork net);

struct MwisResult {
  std::int64_t weight = 0;
  VertexSet set;
};

/// Witnesses never contain weight-0 vertices. mwis_exact and mwis_bipartite
/// return the lex-smallest optimal set under that rule.
MwisResult mwis_exact(const WeightedGraph& wg, const Budgets& budgets = {});
/// Min-cut reduction; throws std::invalid_argument on a non-bipartite graph.
MwisResult mwis_bipartite(const WeightedGraph& wg);

/// An odd cycle transversal S with α(G[S]) <= k, smallest in (α, size, lex)
/// order, or none.
std::optional<VertexSet> find_oct_with_bounded_alpha(const Graph& g, int k, const Budgets& budgets = {});

/// Tries every independent I ⊆ S and solves the bipartite rest G[V - S] -
/// N(I) by max flow. Throws std::invalid_argument when no suitable S exists.
MwisResult mwis_via_oct(const WeightedGraph& wg, int k, const Budgets& budgets = {});
/// Same result; the per-I loop runs on OpenMP threads and is reduced in
/// enumeration order.
MwisResult mwis_via_oct_parallel(const WeightedGraph& wg, int k, int threads = 0, const Budgets& budgets = {});

/// One integer per line (blank lines and '#' comments skipped), index =
/// vertex id.
std::vector<std::int64_t> parse_weights(std::string_view text);

}  // namespace alphawidth
