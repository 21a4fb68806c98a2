#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "alphawidth/base_params.hpp"
#include "alphawidth/graph.hpp"

namespace alphawidth {

/// Annotated parameter λ(G, X): |X| or α(G[X]).
enum class CostKind { Cardinality, Independence };

CostKind parse_cost_kind(std::string_view name);
std::string_view to_string(CostKind kind);
inline constexpr CostKind kBothKinds[] = {CostKind::Cardinality, CostKind::Independence};

/// λ(G, ·) bound to one host graph.
class BagCost {
 public:
  BagCost(const Graph& g, CostKind kind);
  int operator()(const VertexSet& x) const;
  CostKind kind() const { return kind_; }

 private:
  CostKind kind_;
  std::optional<IndependenceOracle> oracle_;
};

struct TreeDecomposition {
  std::vector<VertexSet> bags;
  /// Tree edges between node indices.
  std::vector<Edge> edges;

  int node_count() const { return static_cast<int>(bags.size()); }
};

struct PathDecomposition {
  std::vector<VertexSet> bags;

  TreeDecomposition as_tree() const;
};

/// parent[v] == -1 marks a root.
struct RootedForest {
  std::vector<int> parent;

  RootedForest() = default;
  explicit RootedForest(int n) : parent(static_cast<std::size_t>(n), -1) {}

  int order() const { return static_cast<int>(parent.size()); }
  std::vector<int> roots() const;
  /// Children of every vertex, each list ascending.
  std::vector<std::vector<int>> children() const;
};

enum class ViolationKind {
  VertexOutOfRange,
  VertexUncovered,
  EdgeUncovered,
  DisconnectedOccurrence,
  NotATree,
  MalformedForest,
  EdgeNotAncestral,
};

struct Violation {
  ViolationKind kind;
  int a = -1;
  int b = -1;

  std::string describe() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

std::vector<Violation> validate_tree_decomposition(const Graph& g, const TreeDecomposition& td);
std::vector<Violation> validate_path_decomposition(const Graph& g, const PathDecomposition& pd);
/// Every edge of g must join an ancestor-descendant pair of f.
std::vector<Violation> validate_treedepth_decomposition(const Graph& g, const RootedForest& f);

/// Ancestor-descendant comparability graph of f.
Graph transitive_closure(const RootedForest& f);
/// Maximum number of vertices on a root-to-leaf path; 0 for the empty forest.
int depth(const RootedForest& f);
/// Vertex sets of the root-to-leaf paths in DFS leaf order (roots and
/// children ascending).
std::vector<VertexSet> root_to_leaf_sets(const RootedForest& f);

/// Max λ over bags (or root-to-leaf sets). Throws std::invalid_argument when
/// the decomposition does not validate against g.
int cost(const Graph& g, const TreeDecomposition& td, CostKind kind);
int cost(const Graph& g, const PathDecomposition& pd, CostKind kind);
int cost(const Graph& g, const RootedForest& f, CostKind kind);

/// Bags are the root-to-leaf sets of f in DFS leaf order.
PathDecomposition path_decomp_from_treedepth(const Graph& g, const RootedForest& f);

/// Chain on c in ascending id order with every vertex outside c as a leaf
/// under the last chain vertex. Throws std::invalid_argument if c is not a
/// vertex cover.
RootedForest td_decomp_from_vertex_cover(const Graph& g, const VertexSet& c);

/// Lifts a decomposition of g - s (vertices relabeled in increasing order, as
/// Graph::without produces) to g by adding s to every bag.
TreeDecomposition extend_tree_decomposition(const Graph& g, const VertexSet& s, const TreeDecomposition& td);
PathDecomposition extend_path_decomposition(const Graph& g, const VertexSet& s, const PathDecomposition& pd);
/// Puts a chain on s (ascending) above every root of f.
RootedForest extend_treedepth_decomposition(const Graph& g, const VertexSet& s, const RootedForest& f);

/// Clique-bag decomposition of the forest g - s with s added to every bag.
/// Throws std::invalid_argument if g - s has a cycle.
TreeDecomposition tree_decomp_from_fvs(const Graph& g, const VertexSet& s);

/// Tree decomposition from eliminating vertices in the given order: the bag of
/// v is v plus its neighbors at elimination time in the filled graph.
TreeDecomposition tree_decomp_from_elimination(const Graph& g, const std::vector<int>& order);

/// Contracts tree edges whose one bag is contained in the other, then
/// renumbers nodes by bag order. Validity and cost are unchanged.
TreeDecomposition compress(const TreeDecomposition& td);

/// Bags are the maximal cliques. Throws std::invalid_argument if g is not
/// chordal.
TreeDecomposition chordal_clique_tree(const Graph& g);

void to_json(nlohmann::json& j, const TreeDecomposition& td);
void from_json(const nlohmann::json& j, TreeDecomposition& td);
void to_json(nlohmann::json& j, const PathDecomposition& pd);
void from_json(const nlohmann::json& j, PathDecomposition& pd);
void to_json(nlohmann::json& j, const RootedForest& f);
void from_json(const nlohmann::json& j, RootedForest& f);

}  // namespace alphawidth
