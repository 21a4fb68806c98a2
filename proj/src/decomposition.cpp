#include "alphawidth/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace alphawidth {

CostKind parse_cost_kind(std::string_view name) {
  if (name == "card" || name == "cardinality") return CostKind::Cardinality;
  if (name == "alpha" || name == "independence") return CostKind::Independence;
  throw std::invalid_argument("unknown cost kind '" + std::string(name) + "' (expected card or alpha)");
}

std::string_view to_string(CostKind kind) { return kind == CostKind::Cardinality ? "card" : "alpha"; }

BagCost::BagCost(const Graph& g, CostKind kind) : kind_(kind) {
  if (kind == CostKind::Independence) oracle_.emplace(g);
}

int BagCost::operator()(const VertexSet& x) const {
  return kind_ == CostKind::Cardinality ? x.size() : oracle_->alpha(x);
}

TreeDecomposition PathDecomposition::as_tree() const {
  TreeDecomposition td;
  td.bags = bags;
  for (int i = 0; i + 1 < static_cast<int>(bags.size()); ++i) td.edges.emplace_back(i, i + 1);
  return td;
}

std::vector<int> RootedForest::roots() const {
  std::vector<int> out;
  for (int v = 0; v < order(); ++v)
    if (parent[v] == -1) out.push_back(v);
  return out;
}

std::vector<std::vector<int>> RootedForest::children() const {
  std::vector<std::vector<int>> out(parent.size());
  for (int v = 0; v < order(); ++v)
    if (parent[v] >= 0 && parent[v] < order()) out[parent[v]].push_back(v);
  return out;
}

std::string Violation::describe() const {
  switch (kind) {
    case ViolationKind::VertexOutOfRange:
      return "node " + std::to_string(a) + " holds out-of-range vertex " + std::to_string(b);
    case ViolationKind::VertexUncovered: return "vertex " + std::to_string(a) + " is in no bag";
    case ViolationKind::EdgeUncovered:
      return "edge " + std::to_string(a) + "-" + std::to_string(b) + " is in no bag";
    case ViolationKind::DisconnectedOccurrence:
      return "bags containing vertex " + std::to_string(a) + " are not connected";
    case ViolationKind::NotATree: return "decomposition nodes do not form a tree";
    case ViolationKind::MalformedForest: return "parent relation broken at vertex " + std::to_string(a);
    case ViolationKind::EdgeNotAncestral:
      return "edge " + std::to_string(a) + "-" + std::to_string(b) + " joins incomparable vertices";
  }
  return "unknown violation";
}

namespace {

bool is_tree(int nodes, const std::vector<Edge>& edges) {
  if (nodes == 0) return edges.empty();
  if (static_cast<int>(edges.size()) != nodes - 1) return false;
  std::vector<int> root(static_cast<std::size_t>(nodes));
  std::iota(root.begin(), root.end(), 0);
  std::function<int(int)> find = [&](int x) { return root[x] == x ? x : root[x] = find(root[x]); };
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= nodes || b >= nodes) return false;
    int ra = find(a);
    int rb = find(b);
    if (ra == rb) return false;
    root[ra] = rb;
  }
  return true;
}

}  // namespace

std::vector<Violation> validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
  std::vector<Violation> out;
  const VertexSet all = g.vertices();
  VertexSet covered;
  for (int x = 0; x < td.node_count(); ++x) {
    for (int v : td.bags[x] - all) out.push_back({ViolationKind::VertexOutOfRange, x, v});
    covered |= td.bags[x];
  }
  const bool tree = is_tree(td.node_count(), td.edges);
  if (!tree) out.push_back({ViolationKind::NotATree});
  for (int v : all - covered) out.push_back({ViolationKind::VertexUncovered, v});
  for (auto [u, v] : g.edges()) {
    bool found = false;
    for (const auto& bag : td.bags) {
      if (bag.contains(u) && bag.contains(v)) {
        found = true;
        break;
      }
    }
    if (!found) out.push_back({ViolationKind::EdgeUncovered, u, v});
  }
  if (tree) {
    // Nodes holding v are connected iff they span |nodes|-1 tree edges.
    for (int v : covered & all) {
      int nodes = 0;
      int links = 0;
      for (const auto& bag : td.bags) nodes += bag.contains(v) ? 1 : 0;
      for (auto [a, b] : td.edges) links += (td.bags[a].contains(v) && td.bags[b].contains(v)) ? 1 : 0;
      if (links != nodes - 1) out.push_back({ViolationKind::DisconnectedOccurrence, v});
    }
  }
  return out;
}

std::vector<Violation> validate_path_decomposition(const Graph& g, const PathDecomposition& pd) {
  return validate_tree_decomposition(g, pd.as_tree());
}

namespace {

// Checks the parent array is an acyclic forest over 0..n-1.
std::vector<Violation> forest_structure(int n, const RootedForest& f) {
  std::vector<Violation> out;
  if (f.order() != n) {
    out.push_back({ViolationKind::MalformedForest, -1});
    return out;
  }
  for (int v = 0; v < n; ++v) {
    if (f.parent[v] < -1 || f.parent[v] >= n || f.parent[v] == v) {
      out.push_back({ViolationKind::MalformedForest, v});
      continue;
    }
    int steps = 0;
    for (int u = f.parent[v]; u != -1; u = f.parent[u]) {
      if (u < -1 || u >= n || ++steps > n) {
        out.push_back({ViolationKind::MalformedForest, v});
        break;
      }
    }
  }
  return out;
}

std::vector<VertexSet> ancestor_sets(const RootedForest& f) {
  std::vector<VertexSet> anc(f.parent.size());
  for (int v = 0; v < f.order(); ++v)
    for (int u = f.parent[v]; u != -1; u = f.parent[u]) anc[v].insert(u);
  return anc;
}

}  // namespace

std::vector<Violation> validate_treedepth_decomposition(const Graph& g, const RootedForest& f) {
  auto out = forest_structure(g.order(), f);
  if (!out.empty()) return out;
  auto anc = ancestor_sets(f);
  for (auto [u, v] : g.edges()) {
    if (!anc[u].contains(v) && !anc[v].contains(u)) out.push_back({ViolationKind::EdgeNotAncestral, u, v});
  }
  return out;
}

Graph transitive_closure(const RootedForest& f) {
  if (!forest_structure(f.order(), f).empty()) throw std::invalid_argument("malformed rooted forest");
  Graph closure(f.order());
  auto anc = ancestor_sets(f);
  for (int v = 0; v < f.order(); ++v)
    for (int u : anc[v]) closure.add_edge(u, v);
  return closure;
}

int depth(const RootedForest& f) {
  if (!forest_structure(f.order(), f).empty()) throw std::invalid_argument("malformed rooted forest");
  int best = 0;
  for (int v = 0; v < f.order(); ++v) {
    int d = 1;
    for (int u = f.parent[v]; u != -1; u = f.parent[u]) ++d;
    best = std::max(best, d);
  }
  return best;
}

std::vector<VertexSet> root_to_leaf_sets(const RootedForest& f) {
  if (!forest_structure(f.order(), f).empty()) throw std::invalid_argument("malformed rooted forest");
  auto kids = f.children();
  std::vector<VertexSet> out;
  std::function<void(int, VertexSet)> walk = [&](int v, VertexSet path) {
    path.insert(v);
    if (kids[v].empty()) {
      out.push_back(path);
      return;
    }
    for (int c : kids[v]) walk(c, path);
  };
  for (int r : f.roots()) walk(r, VertexSet());
  return out;
}

namespace {

int max_cost(const Graph& g, const std::vector<VertexSet>& sets, CostKind kind) {
  BagCost lambda(g, kind);
  int best = 0;
  for (const auto& s : sets) best = std::max(best, lambda(s));
  return best;
}

void require_valid(const std::vector<Violation>& v, const char* what) {
  if (!v.empty()) throw std::invalid_argument(std::string("invalid ") + what + ": " + v.front().describe());
}

}  // namespace

int cost(const Graph& g, const TreeDecomposition& td, CostKind kind) {
  require_valid(validate_tree_decomposition(g, td), "tree decomposition");
  return max_cost(g, td.bags, kind);
}

int cost(const Graph& g, const PathDecomposition& pd, CostKind kind) {
  require_valid(validate_path_decomposition(g, pd), "path decomposition");
  return max_cost(g, pd.bags, kind);
}

int cost(const Graph& g, const RootedForest& f, CostKind kind) {
  require_valid(validate_treedepth_decomposition(g, f), "treedepth decomposition");
  return max_cost(g, root_to_leaf_sets(f), kind);
}

PathDecomposition path_decomp_from_treedepth(const Graph& g, const RootedForest& f) {
  require_valid(validate_treedepth_decomposition(g, f), "treedepth decomposition");
  return PathDecomposition{root_to_leaf_sets(f)};
}

RootedForest td_decomp_from_vertex_cover(const Graph& g, const VertexSet& c) {
  if (!c.is_subset_of(g.vertices())) throw std::invalid_argument("cover holds out-of-range vertices");
  if (!g.is_independent(g.vertices() - c)) throw std::invalid_argument("set is not a vertex cover");
  RootedForest f(g.order());
  int prev = -1;
  for (int v : c) {
    f.parent[v] = prev;
    prev = v;
  }
  for (int v : g.vertices() - c) f.parent[v] = prev;
  return f;
}

namespace {

// new id in g - s -> id in g
std::vector<int> lift_map(const Graph& g, const VertexSet& s) {
  std::vector<int> lift;
  for (int v : g.vertices() - s) lift.push_back(v);
  return lift;
}

VertexSet lift_set(const VertexSet& x, const std::vector<int>& lift) {
  VertexSet out;
  for (int v : x) {
    if (v >= static_cast<int>(lift.size())) throw std::invalid_argument("bag vertex outside g - s");
    out.insert(lift[v]);
  }
  return out;
}

}  // namespace

TreeDecomposition extend_tree_decomposition(const Graph& g, const VertexSet& s, const TreeDecomposition& td) {
  const Graph rest = g.without(s);
  require_valid(validate_tree_decomposition(rest, td), "tree decomposition of g - s");
  const VertexSet mod = s & g.vertices();
  auto lift = lift_map(g, mod);
  TreeDecomposition out;
  out.edges = td.edges;
  for (const auto& bag : td.bags) out.bags.push_back(lift_set(bag, lift) | mod);
  if (out.bags.empty() && !mod.empty()) out.bags.push_back(mod);
  return out;
}

PathDecomposition extend_path_decomposition(const Graph& g, const VertexSet& s, const PathDecomposition& pd) {
  return PathDecomposition{extend_tree_decomposition(g, s, pd.as_tree()).bags};
}

RootedForest extend_treedepth_decomposition(const Graph& g, const VertexSet& s, const RootedForest& f) {
  const Graph rest = g.without(s);
  require_valid(validate_treedepth_decomposition(rest, f), "treedepth decomposition of g - s");
  const VertexSet mod = s & g.vertices();
  auto lift = lift_map(g, mod);
  RootedForest out(g.order());
  int sink = -1;
  for (int v : mod) {
    out.parent[v] = sink;
    sink = v;
  }
  for (int v = 0; v < f.order(); ++v) out.parent[lift[v]] = f.parent[v] == -1 ? sink : lift[f.parent[v]];
  return out;
}

TreeDecomposition tree_decomp_from_fvs(const Graph& g, const VertexSet& s) {
  const VertexSet mod = s & g.vertices();
  const VertexSet rest = g.vertices() - mod;
  if (!is_acyclic(g, rest)) throw std::invalid_argument("g - s contains a cycle");
  TreeDecomposition td;
  std::vector<int> node_of(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> tree_roots;
  // Root every tree of the forest g - s at its smallest vertex; the node of v
  // holds {v, parent(v)} and hangs below its parent's node.
  for (const auto& comp : connected_components(g, rest)) {
    int root = comp.first();
    std::vector<int> queue{root};
    std::vector<int> parent(static_cast<std::size_t>(g.order()), -1);
    VertexSet seen;
    seen.insert(root);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int v = queue[i];
      VertexSet bag = mod;
      bag.insert(v);
      if (parent[v] != -1) bag.insert(parent[v]);
      node_of[v] = td.node_count();
      td.bags.push_back(bag);
      if (parent[v] != -1) td.edges.emplace_back(node_of[parent[v]], node_of[v]);
      for (int u : g.neighbors(v) & rest) {
        if (seen.contains(u)) continue;
        seen.insert(u);
        parent[u] = v;
        queue.push_back(u);
      }
    }
    tree_roots.push_back(node_of[root]);
  }
  for (std::size_t i = 1; i < tree_roots.size(); ++i) td.edges.emplace_back(tree_roots[i - 1], tree_roots[i]);
  if (td.bags.empty() && !mod.empty()) td.bags.push_back(mod);
  return td;
}

TreeDecomposition tree_decomp_from_elimination(const Graph& g, const std::vector<int>& order) {
  const int n = g.order();
  if (static_cast<int>(order.size()) != n) throw std::invalid_argument("elimination order has wrong length");
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || pos[order[i]] != -1) {
      throw std::invalid_argument("elimination order is not a permutation");
    }
    pos[order[i]] = i;
  }
  std::vector<VertexSet> filled(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) filled[v] = g.neighbors(v);
  TreeDecomposition td;
  td.bags.resize(static_cast<std::size_t>(n));
  std::vector<int> roots;
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    VertexSet later = filled[v];
    td.bags[i] = later;
    td.bags[i].insert(v);
    int next = -1;
    for (int u : later) {
      if (next == -1 || pos[u] < pos[next]) next = u;
      filled[u] |= later;
      filled[u].erase(u);
      filled[u].erase(v);
    }
    if (next == -1) {
      roots.push_back(i);
    } else {
      td.edges.emplace_back(i, pos[next]);
    }
  }
  for (std::size_t i = 1; i < roots.size(); ++i) td.edges.emplace_back(roots[i - 1], roots[i]);
  return td;
}

TreeDecomposition compress(const TreeDecomposition& td) {
  const int k = td.node_count();
  std::vector<std::set<int>> nbr(static_cast<std::size_t>(k));
  for (auto [a, b] : td.edges) {
    nbr[a].insert(b);
    nbr[b].insert(a);
  }
  std::vector<bool> alive(static_cast<std::size_t>(k), true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < k && !changed; ++x) {
      if (!alive[x]) continue;
      for (int y : nbr[x]) {
        if (!td.bags[x].is_subset_of(td.bags[y])) continue;
        // Contract x into y.
        for (int z : nbr[x]) {
          if (z == y) continue;
          nbr[z].erase(x);
          nbr[z].insert(y);
          nbr[y].insert(z);
        }
        nbr[y].erase(x);
        nbr[x].clear();
        alive[x] = false;
        changed = true;
        break;
      }
    }
  }
  std::vector<int> keep;
  for (int x = 0; x < k; ++x)
    if (alive[x]) keep.push_back(x);
  std::stable_sort(keep.begin(), keep.end(), [&](int a, int b) { return lex_less(td.bags[a], td.bags[b]); });
  std::vector<int> renum(static_cast<std::size_t>(k), -1);
  TreeDecomposition out;
  for (int x : keep) {
    renum[x] = out.node_count();
    out.bags.push_back(td.bags[x]);
  }
  for (int x : keep)
    for (int y : nbr[x])
      if (renum[x] < renum[y]) out.edges.emplace_back(renum[x], renum[y]);
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

TreeDecomposition chordal_clique_tree(const Graph& g) {
  auto peo = perfect_elimination_order(g);
  if (!peo) throw std::invalid_argument("graph is not chordal");
  return compress(tree_decomp_from_elimination(g, *peo));
}

namespace {

nlohmann::json bags_to_json(const std::vector<VertexSet>& bags) {
  auto arr = nlohmann::json::array();
  for (const auto& b : bags) arr.push_back(b.to_vector());
  return arr;
}

std::vector<VertexSet> bags_from_json(const nlohmann::json& j) {
  std::vector<VertexSet> bags;
  for (const auto& b : j) {
    VertexSet s;
    for (int v : b.get<std::vector<int>>()) {
      if (v < 0 || v >= kMaxVertices) throw std::invalid_argument("bag vertex out of range");
      s.insert(v);
    }
    bags.push_back(s);
  }
  return bags;
}

}  // namespace

void to_json(nlohmann::json& j, const TreeDecomposition& td) {
  auto edges = nlohmann::json::array();
  for (auto [a, b] : td.edges) edges.push_back({a, b});
  j = {{"nodes", td.node_count()}, {"edges", edges}, {"bags", bags_to_json(td.bags)}};
}

void from_json(const nlohmann::json& j, TreeDecomposition& td) {
  td.bags = bags_from_json(j.at("bags"));
  td.edges.clear();
  for (const auto& e : j.at("edges")) td.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  if (j.contains("nodes") && j.at("nodes").get<int>() != td.node_count()) {
    throw std::invalid_argument("node count does not match bag count");
  }
}

void to_json(nlohmann::json& j, const PathDecomposition& pd) { to_json(j, pd.as_tree()); }

void from_json(const nlohmann::json& j, PathDecomposition& pd) { pd.bags = bags_from_json(j.at("bags")); }

void to_json(nlohmann::json& j, const RootedForest& f) { j = {{"parent", f.parent}}; }

void from_json(const nlohmann::json& j, RootedForest& f) { f.parent = j.at("parent").get<std::vector<int>>(); }

}  // namespace alphawidth
