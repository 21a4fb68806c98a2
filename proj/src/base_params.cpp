#include "alphawidth/base_params.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>

namespace alphawidth {
namespace {

// Maximum clique by branch and bound with a greedy-coloring bound.
class CliqueSearch {
 public:
  explicit CliqueSearch(const std::vector<VertexSet>& adj) : adj_(adj) {}

  int run(const VertexSet& cand, int lower = 0) {
    best_ = lower;
    if (!cand.empty()) expand(0, cand);
    return best_;
  }

 private:
  void expand(int size, VertexSet cand) {
    std::vector<int> order;
    std::vector<int> bound;
    order.reserve(static_cast<std::size_t>(cand.size()));
    bound.reserve(order.capacity());
    VertexSet uncolored = cand;
    int color = 0;
    while (!uncolored.empty()) {
      ++color;
      VertexSet q = uncolored;
      while (!q.empty()) {
        int v = q.first();
        q.erase(v);
        q -= adj_[v];
        uncolored.erase(v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (size + bound[i] <= best_) return;
      int v = order[i];
      VertexSet next = cand & adj_[v];
      if (next.empty()) {
        best_ = std::max(best_, size + 1);
      } else {
        expand(size + 1, next);
      }
      cand.erase(v);
    }
  }

  const std::vector<VertexSet>& adj_;
  int best_ = 0;
};

// Removes vertices whose remaining neighborhood is a clique; each such vertex
// belongs to some maximum independent set of what is left.
int take_simplicial(const Graph& g, VertexSet& x) {
  int taken = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = x.first(); v != -1; v = x.next(v)) {
      VertexSet nb = g.neighbors(v) & x;
      if (nb.size() <= 1 || g.is_clique(nb)) {
        ++taken;
        x -= nb;
        x.erase(v);
        changed = true;
      }
    }
  }
  return taken;
}

}  // namespace

IndependenceOracle::IndependenceOracle(const Graph& g) : graph_(&g) {
  co_adj_.resize(static_cast<std::size_t>(g.order()));
  const VertexSet all = g.vertices();
  for (int v = 0; v < g.order(); ++v) {
    co_adj_[v] = all - g.neighbors(v);
    co_adj_[v].erase(v);
  }
}

int IndependenceOracle::alpha(const VertexSet& x) const {
  VertexSet rest = x;
  int taken = take_simplicial(*graph_, rest);
  if (rest.empty()) return taken;
  CliqueSearch search(co_adj_);
  return taken + search.run(rest);
}

VertexSet IndependenceOracle::maximum_independent_set(const VertexSet& x) const {
  int remaining = alpha(x);
  VertexSet chosen;
  VertexSet avail = x;
  while (remaining > 0) {
    for (int v = avail.first(); v != -1; v = avail.next(v)) {
      VertexSet after = avail - graph_->neighbors(v);
      for (int u = after.first(); u != -1 && u <= v; u = after.next(u)) after.erase(u);
      if (1 + alpha(after) == remaining) {
        chosen.insert(v);
        avail = after;
        --remaining;
        break;
      }
    }
  }
  return chosen;
}

int independence_number(const Graph& g) { return IndependenceOracle(g).alpha(g.vertices()); }

VertexSet maximum_independent_set(const Graph& g) {
  return IndependenceOracle(g).maximum_independent_set(g.vertices());
}

int clique_number(const Graph& g) { return independence_number(g.complement()); }

VertexSet maximum_clique(const Graph& g) { return maximum_independent_set(g.complement()); }

namespace {

class Colorer {
 public:
  Colorer(const Graph& g, int k) : g_(g), k_(k), color_(static_cast<std::size_t>(g.order()), -1) {}

  bool run() { return assign(0, 0); }
  const std::vector<int>& colors() const { return color_; }

 private:
  // DSATUR choice: most distinct neighbor colors, then highest degree.
  int pick() const {
    int best = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (int v = 0; v < g_.order(); ++v) {
      if (color_[v] != -1) continue;
      std::uint64_t seen = 0;
      for (int u : g_.neighbors(v))
        if (color_[u] != -1) seen |= std::uint64_t{1} << color_[u];
      int sat = std::popcount(seen);
      int deg = g_.degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  bool assign(int done, int used) {
    if (done == g_.order()) return true;
    int v = pick();
    std::uint64_t seen = 0;
    for (int u : g_.neighbors(v))
      if (color_[u] != -1) seen |= std::uint64_t{1} << color_[u];
    for (int c = 0; c < std::min(k_, used + 1); ++c) {
      if (seen >> c & 1U) continue;
      color_[v] = c;
      if (assign(done + 1, std::max(used, c + 1))) return true;
    }
    color_[v] = -1;
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<int> color_;
};

}  // namespace

int chromatic_number(const Graph& g, std::vector<int>* coloring) {
  if (g.order() == 0) {
    if (coloring) coloring->clear();
    return 0;
  }
  if (g.order() > 64) throw BudgetExceeded("chromatic_number supports at most 64 vertices");
  for (int k = std::max(1, clique_number(g));; ++k) {
    Colorer colorer(g, k);
    if (colorer.run()) {
      if (coloring) *coloring = colorer.colors();
      return k;
    }
  }
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

int local_independence_number(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("local independence number of the null graph");
  IndependenceOracle oracle(g);
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, oracle.alpha(g.neighbors(v)));
  return best;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int u : g.neighbors(v)) {
        if (side[u] == -1) {
          side[u] = 1 - side[v];
          queue.push(u);
        } else if (side[u] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

std::optional<std::vector<int>> perfect_elimination_order(const Graph& g) {
  const int n = g.order();
  // Maximum cardinality search; the reverse visit order is a PEO iff g is chordal.
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  std::vector<int> visit;
  visit.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!visited[v] && (best == -1 || weight[v] > weight[best])) best = v;
    visited[best] = true;
    visit.push_back(best);
    for (int u : g.neighbors(best))
      if (!visited[u]) ++weight[u];
  }
  std::vector<int> order(visit.rbegin(), visit.rend());
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  for (int v = 0; v < n; ++v) {
    VertexSet later;
    int first_later = -1;
    for (int u : g.neighbors(v)) {
      if (pos[u] > pos[v]) {
        later.insert(u);
        if (first_later == -1 || pos[u] < pos[first_later]) first_later = u;
      }
    }
    if (first_later == -1) continue;
    later.erase(first_later);
    if (!later.is_subset_of(g.neighbors(first_later))) return std::nullopt;
  }
  return order;
}

bool is_chordal(const Graph& g) { return perfect_elimination_order(g).has_value(); }

namespace {

class InducedMatcher {
 public:
  InducedMatcher(const Graph& g, const Graph& h) : g_(g), h_(h) {
    // Match pattern vertices in BFS order from the highest-degree vertex so
    // adjacency constraints kick in early.
    std::vector<bool> seen(static_cast<std::size_t>(h.order()), false);
    while (static_cast<int>(order_.size()) < h.order()) {
      int start = -1;
      for (int v = 0; v < h.order(); ++v)
        if (!seen[v] && (start == -1 || h.degree(v) > h.degree(start))) start = v;
      std::queue<int> queue;
      queue.push(start);
      seen[start] = true;
      while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        order_.push_back(v);
        for (int u : h.neighbors(v)) {
          if (!seen[u]) {
            seen[u] = true;
            queue.push(u);
          }
        }
      }
    }
    image_.assign(static_cast<std::size_t>(h.order()), -1);
  }

  bool run() { return extend(0, VertexSet()); }

 private:
  bool extend(int depth, VertexSet used) {
    if (depth == h_.order()) return true;
    int hv = order_[depth];
    VertexSet cand = g_.vertices() - used;
    for (int i = 0; i < depth; ++i) {
      int hu = order_[i];
      if (h_.adjacent(hv, hu)) {
        cand &= g_.neighbors(image_[hu]);
      } else {
        cand -= g_.neighbors(image_[hu]);
      }
    }
    for (int gv : cand) {
      if (g_.degree(gv) < h_.degree(hv)) continue;
      image_[hv] = gv;
      VertexSet next = used;
      next.insert(gv);
      if (extend(depth + 1, next)) return true;
    }
    image_[hv] = -1;
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<int> order_;
  std::vector<int> image_;
};

}  // namespace

bool contains_induced(const Graph& g, const Graph& h) {
  if (h.order() > g.order()) return false;
  if (h.order() == 0) return true;
  return InducedMatcher(g, h).run();
}

int max_matching_size(const Graph& g) {
  // Edmonds' blossom algorithm.
  const int n = g.order();
  std::vector<int> match(static_cast<std::size_t>(n), -1);
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::vector<int> base(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n));
  std::vector<bool> blossom(static_cast<std::size_t>(n));

  auto lca = [&](int a, int b) {
    std::vector<bool> mark(static_cast<std::size_t>(n), false);
    while (true) {
      a = base[a];
      mark[a] = true;
      if (match[a] == -1) break;
      a = parent[match[a]];
    }
    while (true) {
      b = base[b];
      if (mark[b]) return b;
      b = parent[match[b]];
    }
  };
  auto mark_path = [&](int v, int b, int child) {
    while (base[v] != b) {
      blossom[base[v]] = blossom[base[match[v]]] = true;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  };
  auto find_path = [&](int root) {
    std::fill(used.begin(), used.end(), false);
    std::fill(parent.begin(), parent.end(), -1);
    std::iota(base.begin(), base.end(), 0);
    used[root] = true;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int to : g.neighbors(v)) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
          int cur = lca(v, to);
          std::fill(blossom.begin(), blossom.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n; ++i) {
            if (blossom[base[i]]) {
              base[i] = cur;
              if (!used[i]) {
                used[i] = true;
                queue.push(i);
              }
            }
          }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (match[to] == -1) return to;
          used[match[to]] = true;
          queue.push(match[to]);
        }
      }
    }
    return -1;
  };

  int size = 0;
  for (int v = 0; v < n; ++v) {
    if (match[v] != -1) continue;
    int end = find_path(v);
    if (end == -1) continue;
    ++size;
    while (end != -1) {
      int pv = parent[end];
      int next = match[pv];
      match[end] = pv;
      match[pv] = end;
      end = next;
    }
  }
  return size;
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (!left.empty()) {
    VertexSet comp;
    VertexSet frontier;
    frontier.insert(left.first());
    while (!frontier.empty()) {
      comp |= frontier;
      frontier = (g.neighborhood(frontier) & within) - comp;
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) { return connected_components(g, g.vertices()); }

bool is_acyclic(const Graph& g, const VertexSet& within) {
  int twice_edges = 0;
  for (int v : within) twice_edges += (g.neighbors(v) & within).size();
  int comps = static_cast<int>(connected_components(g, within).size());
  return twice_edges / 2 == within.size() - comps;
}

}  // namespace alphawidth
