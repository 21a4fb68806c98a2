#include "alphawidth/widths.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "alphawidth/base_params.hpp"
#include "alphawidth/kernels.hpp"

namespace alphawidth {

namespace {

using Mask = std::uint64_t;

inline Mask bit(int v) { return Mask{1} << v; }

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) adj[v] = g.mask(v);
  return adj;
}

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }

void require_order(const Graph& g, int limit, const char* solver) {
  if (g.order() > limit) {
    throw BudgetExceeded(std::string(solver) + " budget is " + std::to_string(limit) + " vertices, got " +
                         std::to_string(g.order()));
  }
}

std::vector<Mask> components(const std::vector<Mask>& adj, Mask c) {
  std::vector<Mask> out;
  while (c) {
    Mask comp = c & (~c + 1);
    Mask frontier = comp;
    while (frontier) {
      int u = std::countr_zero(frontier);
      frontier &= frontier - 1;
      Mask nb = adj[u] & c & ~comp;
      comp |= nb;
      frontier |= nb;
    }
    out.push_back(comp);
    c &= ~comp;
  }
  return out;
}

// Vertices outside elim + v reachable from v through elim.
Mask eliminated_reach(const std::vector<Mask>& adj, Mask elim, int v) {
  Mask reached = adj[v] | bit(v);
  Mask frontier = adj[v] & elim;
  while (frontier) {
    int u = std::countr_zero(frontier);
    frontier &= frontier - 1;
    Mask nb = adj[u] & ~reached;
    reached |= nb;
    frontier |= nb & elim;
  }
  return reached & ~elim & ~bit(v);
}

Mask boundary(const std::vector<Mask>& adj, Mask prefix) {
  Mask b = 0;
  for (Mask rest = prefix; rest; rest &= rest - 1) {
    int u = std::countr_zero(rest);
    if (adj[u] & ~prefix) b |= bit(u);
  }
  return b;
}

VertexSet to_set(Mask m) { return VertexSet::from_mask(m); }

PathDecomposition path_from_order(const std::vector<Mask>& adj, const std::vector<int>& order) {
  std::vector<VertexSet> raw;
  Mask prefix = 0;
  for (int v : order) {
    raw.push_back(to_set(boundary(adj, prefix) | bit(v)));
    prefix |= bit(v);
  }
  // Drop bags contained in a neighbor; the rest stays a valid decomposition.
  PathDecomposition pd;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!pd.bags.empty() && raw[i].is_subset_of(pd.bags.back())) continue;
    if (i + 1 < raw.size() && raw[i].is_subset_of(raw[i + 1])) continue;
    pd.bags.push_back(raw[i]);
  }
  return pd;
}

void confirm(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("internal solver inconsistency: ") + what);
}

}  // namespace

WidthResult<TreeDecomposition> lambda_treewidth(const Graph& g, CostKind kind, const Budgets& budgets) {
  require_order(g, std::min(kind == CostKind::Cardinality ? budgets.treewidth_card : budgets.treewidth_alpha, 30),
                "treewidth");
  WidthResult<TreeDecomposition> r;
  r.kind = kind;
  const int n = g.order();
  if (n == 0) return r;
  const auto adj = adjacency_masks(g);
  const MaskCost lambda(g, kind);
  const std::uint32_t full = static_cast<std::uint32_t>(full_mask(n));
  std::vector<std::uint8_t> dp(std::size_t{1} << n, 0);
  std::vector<std::uint8_t> pick(std::size_t{1} << n, 0);
  for (std::uint32_t s = 1; s <= full && s != 0; ++s) {
    int best = INT_MAX;
    int arg = -1;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      std::uint32_t prior = s & ~(1U << v);
      if (dp[prior] >= best) continue;
      int c = std::max<int>(dp[prior], lambda(eliminated_reach(adj, prior, v) | bit(v)));
      if (c < best) {
        best = c;
        arg = v;
      }
    }
    dp[s] = static_cast<std::uint8_t>(best);
    pick[s] = static_cast<std::uint8_t>(arg);
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  std::uint32_t s = full;
  for (int i = n - 1; i >= 0; --i) {
    order[i] = pick[s];
    s &= ~(1U << pick[s]);
  }
  r.witness = compress(tree_decomp_from_elimination(g, order));
  r.value = cost(g, r.witness, kind);
  confirm(r.value == dp[full], "treewidth witness cost");
  return r;
}

WidthResult<PathDecomposition> lambda_pathwidth(const Graph& g, CostKind kind, const Budgets& budgets) {
  require_order(g, std::min(budgets.pathwidth_exact, 30), "pathwidth");
  WidthResult<PathDecomposition> r;
  r.kind = kind;
  const int n = g.order();
  if (n == 0) return r;
  const auto adj = adjacency_masks(g);
  const MaskCost lambda(g, kind);
  const std::uint32_t full = static_cast<std::uint32_t>(full_mask(n));
  std::vector<std::uint8_t> dp(std::size_t{1} << n, 0);
  std::vector<std::uint8_t> pick(std::size_t{1} << n, 0);
  std::vector<std::uint32_t> bd(std::size_t{1} << n, 0);
  for (std::uint32_t s = 1; s <= full && s != 0; ++s) {
    bd[s] = static_cast<std::uint32_t>(boundary(adj, s));
    int best = INT_MAX;
    int arg = -1;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      std::uint32_t prior = s & ~(1U << v);
      if (dp[prior] >= best) continue;
      int c = std::max<int>(dp[prior], lambda(bd[prior] | bit(v)));
      if (c < best) {
        best = c;
        arg = v;
      }
    }
    dp[s] = static_cast<std::uint8_t>(best);
    pick[s] = static_cast<std::uint8_t>(arg);
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  std::uint32_t s = full;
  for (int i = n - 1; i >= 0; --i) {
    order[i] = pick[s];
    s &= ~(1U << pick[s]);
  }
  r.witness = path_from_order(adj, order);
  r.value = cost(g, r.witness, kind);
  confirm(r.value == dp[full], "pathwidth witness cost");
  return r;
}

namespace {

class PathSearch {
 public:
  PathSearch(const Graph& g, CostKind kind, int k, long long cap)
      : adj_(adjacency_masks(g)), lambda_(g, kind), k_(k), all_(full_mask(g.order())), cap_(cap) {}

  std::optional<std::vector<int>> run() {
    if (dfs(0)) return order_;
    return std::nullopt;
  }

 private:
  bool dfs(Mask s) {
    if (s == all_) return true;
    if (dead_.contains(s)) return false;
    if (++nodes_ > cap_) throw BudgetExceeded("pathwidth decision search exceeded its node budget");
    const Mask bd = boundary(adj_, s);
    // A vertex with no neighbor left outside never hurts to place next.
    for (Mask rest = all_ & ~s; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      if ((adj_[v] & ~s) == 0 && lambda_(bd | bit(v)) <= k_) {
        order_.push_back(v);
        if (dfs(s | bit(v))) return true;
        order_.pop_back();
        dead_.insert(s);
        return false;
      }
    }
    std::vector<std::pair<int, int>> cands;
    for (Mask rest = all_ & ~s; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      if (lambda_(bd | bit(v)) > k_) continue;
      cands.emplace_back(std::popcount(boundary(adj_, s | bit(v))), v);
    }
    std::sort(cands.begin(), cands.end());
    for (auto [grow, v] : cands) {
      order_.push_back(v);
      if (dfs(s | bit(v))) return true;
      order_.pop_back();
    }
    dead_.insert(s);
    return false;
  }

  std::vector<Mask> adj_;
  MaskCost lambda_;
  int k_;
  Mask all_;
  long long cap_;
  long long nodes_ = 0;
  std::unordered_set<Mask> dead_;
  std::vector<int> order_;
};

}  // namespace

std::optional<PathDecomposition> find_path_decomposition(const Graph& g, CostKind kind, int k,
                                                         const Budgets& budgets) {
  require_order(g, std::min(budgets.pathwidth_decision, 64), "pathwidth decision");
  if (g.order() == 0) return PathDecomposition{};
  if (k < 1) return std::nullopt;
  PathSearch search(g, kind, k, budgets.search_nodes);
  auto order = search.run();
  if (!order) return std::nullopt;
  auto pd = path_from_order(adjacency_masks(g), *order);
  confirm(cost(g, pd, kind) <= k, "pathwidth decision witness");
  return pd;
}

bool lambda_pw_at_most(const Graph& g, CostKind kind, int k, const Budgets& budgets) {
  return find_path_decomposition(g, kind, k, budgets).has_value();
}

namespace {

class DepthSolver {
 public:
  DepthSolver(const Graph& g, CostKind kind) : adj_(adjacency_masks(g)), lambda_(g, kind), kind_(kind) {}

  int solve(Mask c, Mask a) {
    const Mask k = key(c, a);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second.first;
    const int floor = kind_ == CostKind::Cardinality ? std::popcount(a) + 1 : lambda_(a);
    int best = INT_MAX;
    int arg = -1;
    for (Mask rest = c; rest && best > floor; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      const Mask below = c & ~bit(v);
      const Mask av = a | bit(v);
      int val = 0;
      if (below == 0) {
        val = lambda_(av);
      } else {
        for (Mask comp : components(adj_, below)) {
          val = std::max(val, solve(comp, av));
          if (val >= best) break;
        }
      }
      if (val < best) {
        best = val;
        arg = v;
      }
    }
    memo_.emplace(k, std::make_pair(best, arg));
    return best;
  }

  void build(Mask c, Mask a, int parent, RootedForest& f) {
    const int v = memo_.at(key(c, a)).second;
    f.parent[v] = parent;
    const Mask below = c & ~bit(v);
    for (Mask comp : components(adj_, below)) build(comp, a | bit(v), v, f);
  }

  const std::vector<Mask>& adj() const { return adj_; }

 private:
  // Under cardinality only |A| matters.
  Mask key(Mask c, Mask a) const {
    return c | ((kind_ == CostKind::Cardinality ? static_cast<Mask>(std::popcount(a)) : a) << 32);
  }

  std::vector<Mask> adj_;
  MaskCost lambda_;
  CostKind kind_;
  std::unordered_map<Mask, std::pair<int, int>> memo_;
};

class DepthSearch {
 public:
  DepthSearch(const Graph& g, CostKind kind, int k, long long cap)
      : adj_(adjacency_masks(g)), lambda_(g, kind), kind_(kind), k_(k), cap_(cap), forest_(g.order()) {}

  std::optional<RootedForest> run() {
    for (Mask comp : components(adj_, full_mask(static_cast<int>(adj_.size())))) {
      if (!can(comp, 0, -1)) return std::nullopt;
    }
    return forest_;
  }

 private:
  void chain(Mask c, int parent) {
    for (Mask rest = c; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      forest_.parent[v] = parent;
      parent = v;
    }
  }

  bool can(Mask c, Mask a, int parent) {
    if (kind_ == CostKind::Cardinality) {
      if (std::popcount(a) + 1 > k_) return false;
      if (std::popcount(a) + std::popcount(c) <= k_) {
        chain(c, parent);
        return true;
      }
    } else if (lambda_(a | c) <= k_) {
      chain(c, parent);
      return true;
    }
    const Mask k = c | ((kind_ == CostKind::Cardinality ? static_cast<Mask>(std::popcount(a)) : a) << 32);
    if (dead_.contains(k)) return false;
    if (++nodes_ > cap_) throw BudgetExceeded("treedepth decision search exceeded its node budget");
    std::vector<std::pair<int, int>> cands;
    for (Mask rest = c; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      if (kind_ == CostKind::Independence && lambda_(a | bit(v)) > k_) continue;
      cands.emplace_back(-std::popcount(adj_[v] & c), v);
    }
    std::sort(cands.begin(), cands.end());
    for (auto [score, v] : cands) {
      forest_.parent[v] = parent;
      bool ok = true;
      for (Mask comp : components(adj_, c & ~bit(v))) {
        if (!can(comp, a | bit(v), v)) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
    dead_.insert(k);
    return false;
  }

  std::vector<Mask> adj_;
  MaskCost lambda_;
  CostKind kind_;
  int k_;
  long long cap_;
  long long nodes_ = 0;
  RootedForest forest_;
  std::unordered_set<Mask> dead_;
};

}  // namespace

WidthResult<RootedForest> lambda_treedepth(const Graph& g, CostKind kind, const Budgets& budgets) {
  require_order(g, std::min(budgets.treedepth_exact, 32), "treedepth");
  WidthResult<RootedForest> r;
  r.kind = kind;
  r.witness = RootedForest(g.order());
  if (g.order() == 0) return r;
  DepthSolver solver(g, kind);
  int best = 0;
  for (Mask comp : components(solver.adj(), full_mask(g.order()))) {
    best = std::max(best, solver.solve(comp, 0));
    solver.build(comp, 0, -1, r.witness);
  }
  r.value = cost(g, r.witness, kind);
  confirm(r.value == best, "treedepth witness cost");
  return r;
}

std::optional<RootedForest> find_treedepth_decomposition(const Graph& g, CostKind kind, int k,
                                                         const Budgets& budgets) {
  require_order(g, std::min(budgets.treedepth_decision, 32), "treedepth decision");
  if (g.order() == 0) return RootedForest(0);
  if (k < 1) return std::nullopt;
  DepthSearch search(g, kind, k, budgets.search_nodes);
  auto f = search.run();
  if (f) confirm(cost(g, *f, kind) <= k, "treedepth decision witness");
  return f;
}

bool lambda_td_at_most(const Graph& g, CostKind kind, int k, const Budgets& budgets) {
  return find_treedepth_decomposition(g, kind, k, budgets).has_value();
}

WidthResult<std::vector<int>> degeneracy(const Graph& g, CostKind kind) {
  WidthResult<std::vector<int>> r;
  r.kind = kind;
  BagCost lambda(g, kind);
  VertexSet current = g.vertices();
  while (!current.empty()) {
    int best = INT_MAX;
    int arg = -1;
    for (int v : current) {
      int c = lambda(g.neighbors(v) & current);
      if (c < best) {
        best = c;
        arg = v;
      }
    }
    r.value = std::max(r.value, best);
    r.witness.push_back(arg);
    current.erase(arg);
  }
  return r;
}

namespace {

class RainbowSearch {
 public:
  explicit RainbowSearch(const Graph& g) : g_(g), n_(g.order()), color_(static_cast<std::size_t>(n_), 0) {}

  void run() { colorings(0, 0); }
  int best() const { return best_; }
  const std::vector<int>& best_coloring() const { return best_coloring_; }

 private:
  void colorings(int i, int used) {
    if (best_ == 1) return;
    if (i == n_) {
      int val = rainbow(0, VertexSet(), 0);
      if (val < best_) {
        best_ = val;
        best_coloring_ = color_;
      }
      return;
    }
    for (int c = 0; c <= used; ++c) {
      bool clash = false;
      for (int u : g_.neighbors(i)) {
        if (u < i && color_[u] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      color_[i] = c;
      colorings(i + 1, std::max(used, c + 1));
    }
  }

  // Largest independent set with pairwise distinct colors among vertices >= i.
  int rainbow(int i, VertexSet chosen, unsigned colors) const {
    if (i == n_) return chosen.size();
    int skip = rainbow(i + 1, chosen, colors);
    if ((colors >> color_[i] & 1U) || g_.neighbors(i).intersects(chosen)) return skip;
    chosen.insert(i);
    return std::max(skip, rainbow(i + 1, chosen, colors | 1U << color_[i]));
  }

  const Graph& g_;
  int n_;
  std::vector<int> color_;
  int best_ = INT_MAX;
  std::vector<int> best_coloring_;
};

}  // namespace

WidthResult<std::vector<int>> alpha_chromatic(const Graph& g, const Budgets& budgets) {
  require_order(g, std::min(budgets.alpha_chromatic, 12), "alpha-chromatic");
  WidthResult<std::vector<int>> r;
  r.kind = CostKind::Independence;
  if (g.order() == 0) return r;
  RainbowSearch search(g);
  search.run();
  r.value = search.best();
  r.witness = search.best_coloring();
  return r;
}

}  // namespace alphawidth
