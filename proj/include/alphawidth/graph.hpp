#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "alphawidth/vertex_set.hpp"

namespace alphawidth {

/// Raised when an exact solver is asked to work beyond its configured size.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the text format readers.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertex ids 0..n-1 with bitset adjacency.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  /// Throws std::invalid_argument on loops or out-of-range ids. Re-adding an
  /// existing edge is a no-op.
  void add_edge(int u, int v);

  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  /// N(S) \ S
  VertexSet neighborhood(const VertexSet& s) const;
  int degree(int v) const { return adj_[v].size(); }
  int edge_count() const;
  /// Edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  /// Neighborhood as a 64-bit mask. Requires order() <= 64.
  std::uint64_t mask(int v) const { return adj_[v].low_mask(); }

  /// G[keep] relabeled to 0..|keep|-1 in increasing id order. When
  /// old_to_new is given it receives the map (-1 for deleted vertices).
  Graph induced(const VertexSet& keep, std::vector<int>* old_to_new = nullptr) const;
  /// G - s
  Graph without(const VertexSet& s, std::vector<int>* old_to_new = nullptr) const {
    return induced(vertices() - s, old_to_new);
  }
  Graph complement() const;
  /// Vertex v of this graph becomes perm[v].
  Graph permuted(std::span<const int> perm) const;
  /// Disjoint union; the other graph's vertices follow this graph's.
  Graph disjoint_union(const Graph& other) const;

  bool is_independent(const VertexSet& s) const;
  bool is_clique(const VertexSet& s) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

/// Graph plus non-negative integer vertex weights.
struct WeightedGraph {
  Graph graph;
  std::vector<std::int64_t> weights;

  WeightedGraph() = default;
  /// Throws std::invalid_argument if the weight vector has the wrong length
  /// or contains a negative entry.
  WeightedGraph(Graph g, std::vector<std::int64_t> w);

  std::int64_t weight_of(const VertexSet& s) const;
  std::int64_t total_weight() const;
};

}  // namespace alphawidth
