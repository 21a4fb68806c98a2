#include "alphawidth/mwis.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <iterator>
#include <limits>
#include <stdexcept>
#include <string>

#include <omp.h>

#include "alphawidth/base_params.hpp"
#include "alphawidth/kernels.hpp"

namespace alphawidth {

FlowNetwork::FlowNetwork(int nodes, int source, int sink)
    : adj_(static_cast<std::size_t>(std::max(nodes, 0))), source_(source), sink_(sink) {
  if (nodes < 2 || source < 0 || sink < 0 || source >= nodes || sink >= nodes || source == sink) {
    throw std::invalid_argument("flow network needs two distinct terminals among its nodes");
  }
}

void FlowNetwork::add_arc(int from, int to, std::int64_t cap) {
  if (from < 0 || to < 0 || from >= nodes() || to >= nodes()) throw std::invalid_argument("arc endpoint out of range");
  if (cap < 0) throw std::invalid_argument("negative arc capacity");
  if (to == source_) throw std::invalid_argument("arc into the source");
  if (from == sink_) throw std::invalid_argument("arc out of the sink");
  if (from == to) return;
  adj_[from].push_back({to, cap, static_cast<int>(adj_[to].size())});
  adj_[to].push_back({from, 0, static_cast<int>(adj_[from].size()) - 1});
}

FlowResult max_flow(FlowNetwork net) {
  auto& adj = net.adj_;
  const int n = net.nodes();
  const int s = net.source_;
  const int t = net.sink_;
  std::vector<int> level(static_cast<std::size_t>(n));
  std::vector<std::size_t> it(static_cast<std::size_t>(n));
  std::vector<int> queue;

  auto bfs = [&] {
    std::fill(level.begin(), level.end(), -1);
    queue.assign(1, s);
    level[s] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int u = queue[i];
      for (const auto& a : adj[u]) {
        if (a.cap > 0 && level[a.to] < 0) {
          level[a.to] = level[u] + 1;
          queue.push_back(a.to);
        }
      }
    }
    return level[t] >= 0;
  };

  auto dfs = [&](auto&& self, int u, std::int64_t pushed) -> std::int64_t {
    if (u == t) return pushed;
    for (auto& i = it[u]; i < adj[u].size(); ++i) {
      auto& a = adj[u][i];
      if (a.cap <= 0 || level[a.to] != level[u] + 1) continue;
      std::int64_t got = self(self, a.to, std::min(pushed, a.cap));
      if (got > 0) {
        a.cap -= got;
        adj[a.to][a.rev].cap += got;
        return got;
      }
    }
    return 0;
  };

  FlowResult r;
  while (bfs()) {
    std::fill(it.begin(), it.end(), 0);
    while (std::int64_t f = dfs(dfs, s, std::numeric_limits<std::int64_t>::max())) r.value += f;
  }
  r.source_side.assign(static_cast<std::size_t>(n), false);
  for (int v = 0; v < n; ++v) r.source_side[v] = level[v] >= 0;
  return r;
}

namespace {

using Mask = std::uint64_t;

void require_order(const Graph& g, int limit, const char* solver) {
  if (g.order() > limit) {
    throw BudgetExceeded(std::string(solver) + " budget is " + std::to_string(limit) + " vertices, got " +
                         std::to_string(g.order()));
  }
}

// Include-first DFS in ascending vertex order over positive-weight vertices;
// strict improvement keeps the first optimum met, which is the lex-smallest.
class MwisSearch {
 public:
  explicit MwisSearch(const WeightedGraph& wg) : w_(wg.weights) {
    for (int v = 0; v < wg.graph.order(); ++v) adj_.push_back(wg.graph.mask(v));
  }

  void run(Mask cand) { dfs(cand, 0, 0); }
  std::int64_t best() const { return best_; }
  Mask best_set() const { return best_set_; }

 private:
  // Greedy clique cover of cand; each clique contributes its heaviest vertex.
  std::int64_t bound(Mask cand) const {
    std::int64_t total = 0;
    while (cand) {
      int v = std::countr_zero(cand);
      Mask clique = Mask{1} << v;
      Mask common = adj_[v] & cand;
      std::int64_t heaviest = w_[v];
      while (common) {
        int u = std::countr_zero(common);
        clique |= Mask{1} << u;
        common &= adj_[u];
        heaviest = std::max(heaviest, w_[u]);
      }
      total += heaviest;
      cand &= ~clique;
    }
    return total;
  }

  void dfs(Mask cand, std::int64_t weight, Mask chosen) {
    if (weight > best_) {
      best_ = weight;
      best_set_ = chosen;
    }
    if (!cand || weight + bound(cand) <= best_) return;
    int v = std::countr_zero(cand);
    dfs(cand & ~adj_[v] & ~(Mask{1} << v), weight + w_[v], chosen | Mask{1} << v);
    dfs(cand & ~(Mask{1} << v), weight, chosen);
  }

  std::vector<std::int64_t> w_;
  std::vector<Mask> adj_;
  std::int64_t best_ = 0;
  Mask best_set_ = 0;
};

Mask positive_vertices(const WeightedGraph& wg) {
  Mask m = 0;
  for (int v = 0; v < wg.graph.order(); ++v)
    if (wg.weights[v] > 0) m |= Mask{1} << v;
  return m;
}

}  // namespace

MwisResult mwis_exact(const WeightedGraph& wg, const Budgets& budgets) {
  require_order(wg.graph, std::min(budgets.mwis_exact, 64), "exact MWIS");
  MwisSearch search(wg);
  search.run(positive_vertices(wg));
  return {search.best(), VertexSet::from_mask(search.best_set())};
}

namespace {

struct BipartiteInstance {
  const Graph& g;
  const std::vector<std::int64_t>& w;
  const std::vector<int>& side;
};

// Max weight of an independent set of G[alive] (positive weights only).
std::int64_t bipartite_optimum(const BipartiteInstance& in, const VertexSet& alive) {
  const int n = in.g.order();
  std::int64_t total = 0;
  for (int v : alive) total += in.w[v];
  const std::int64_t inf = total + 1;
  FlowNetwork net(n + 2, n, n + 1);
  for (int v : alive) {
    if (in.side[v] == 0) {
      net.add_arc(n, v, in.w[v]);
      for (int u : in.g.neighbors(v) & alive) net.add_arc(v, u, inf);
    } else {
      net.add_arc(v, n + 1, in.w[v]);
    }
  }
  return total - max_flow(std::move(net)).value;
}

}  // namespace

MwisResult mwis_bipartite(const WeightedGraph& wg) {
  const Graph& g = wg.graph;
  auto side = bipartition(g);
  if (!side) throw std::invalid_argument("mwis_bipartite needs a bipartite graph");
  BipartiteInstance in{g, wg.weights, *side};
  VertexSet alive;
  for (int v = 0; v < g.order(); ++v)
    if (wg.weights[v] > 0) alive.insert(v);
  const std::int64_t opt = bipartite_optimum(in, alive);
  // Fix vertices in ascending order, taking each one when the optimum
  // survives; this yields the lex-smallest optimal set.
  MwisResult r{opt, VertexSet()};
  std::int64_t taken = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (!alive.contains(v)) continue;
    VertexSet trial = alive - g.neighbors(v);
    trial.erase(v);
    if (taken + wg.weights[v] + bipartite_optimum(in, trial) == opt) {
      r.set.insert(v);
      taken += wg.weights[v];
      alive = trial;
    } else {
      alive.erase(v);
    }
  }
  return r;
}

namespace {

bool bipartite_mask(const std::vector<std::uint32_t>& adj, std::uint32_t alive) {
  int color[32];
  std::fill(std::begin(color), std::end(color), -1);
  int stack[32];
  for (std::uint32_t roots = alive; roots; roots &= roots - 1) {
    int r = std::countr_zero(roots);
    if (color[r] != -1) continue;
    color[r] = 0;
    int top = 0;
    stack[top++] = r;
    while (top) {
      int u = stack[--top];
      for (std::uint32_t nb = adj[u] & alive; nb; nb &= nb - 1) {
        int v = std::countr_zero(nb);
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          stack[top++] = v;
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

std::optional<VertexSet> find_oct_with_bounded_alpha(const Graph& g, int k, const Budgets& budgets) {
  require_order(g, std::min(budgets.oct_alpha_search, 26), "bounded-alpha OCT search");
  if (k < 0) throw std::invalid_argument("alpha bound must be non-negative");
  const int n = g.order();
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) adj[v] = static_cast<std::uint32_t>(g.mask(v));
  const auto table = SubsetAlphaTable::build_parallel(g);
  const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  std::optional<std::uint32_t> best;
  auto better = [&](std::uint32_t a, std::uint32_t b) {
    if (table[a] != table[b]) return table[a] < table[b];
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    return lex_less(VertexSet::from_mask(a), VertexSet::from_mask(b));
  };
  for (std::uint64_t s = 0; s <= full; ++s) {
    const auto m = static_cast<std::uint32_t>(s);
    if (table[m] > k || (best && !better(m, *best))) continue;
    if (bipartite_mask(adj, full & ~m)) best = m;
  }
  if (!best) return std::nullopt;
  return VertexSet::from_mask(*best);
}

namespace {

void independent_subsets(const Graph& g, const std::vector<int>& pool, std::size_t i, VertexSet cur,
                         std::vector<VertexSet>& out) {
  if (i == pool.size()) {
    out.push_back(cur);
    return;
  }
  independent_subsets(g, pool, i + 1, cur, out);
  if (!g.neighbors(pool[i]).intersects(cur)) {
    cur.insert(pool[i]);
    independent_subsets(g, pool, i + 1, cur, out);
  }
}

struct OctPlan {
  VertexSet s;
  std::vector<VertexSet> choices;
};

OctPlan plan_oct(const WeightedGraph& wg, int k, const Budgets& budgets) {
  auto s = find_oct_with_bounded_alpha(wg.graph, k, budgets);
  if (!s) throw std::invalid_argument("no odd cycle transversal with alpha <= " + std::to_string(k));
  OctPlan plan{*s, {}};
  independent_subsets(wg.graph, s->to_vector(), 0, VertexSet(), plan.choices);
  return plan;
}

MwisResult solve_choice(const WeightedGraph& wg, const VertexSet& s, const VertexSet& i) {
  const Graph& g = wg.graph;
  std::vector<int> old_to_new;
  const VertexSet rest = g.vertices() - s - g.neighborhood(i) - i;
  Graph sub = g.induced(rest, &old_to_new);
  std::vector<std::int64_t> w(static_cast<std::size_t>(sub.order()));
  std::vector<int> new_to_old(static_cast<std::size_t>(sub.order()));
  for (int v : rest) {
    w[old_to_new[v]] = wg.weights[v];
    new_to_old[old_to_new[v]] = v;
  }
  MwisResult part = mwis_bipartite(WeightedGraph(std::move(sub), std::move(w)));
  MwisResult r;
  for (int v : i) {
    if (wg.weights[v] > 0) r.set.insert(v);
  }
  for (int v : part.set) r.set.insert(new_to_old[v]);
  r.weight = wg.weight_of(r.set);
  return r;
}

bool improves(const MwisResult& a, const MwisResult& best) {
  return a.weight > best.weight || (a.weight == best.weight && lex_less(a.set, best.set));
}

}  // namespace

MwisResult mwis_via_oct(const WeightedGraph& wg, int k, const Budgets& budgets) {
  const auto plan = plan_oct(wg, k, budgets);
  std::optional<MwisResult> best;
  for (const auto& i : plan.choices) {
    auto r = solve_choice(wg, plan.s, i);
    if (!best || improves(r, *best)) best = r;
  }
  return *best;
}

MwisResult mwis_via_oct_parallel(const WeightedGraph& wg, int k, int threads, const Budgets& budgets) {
  const auto plan = plan_oct(wg, k, budgets);
  std::vector<MwisResult> results(plan.choices.size());
  if (threads <= 0) threads = omp_get_max_threads();
  const auto count = static_cast<std::int64_t>(plan.choices.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::int64_t idx = 0; idx < count; ++idx) results[idx] = solve_choice(wg, plan.s, plan.choices[idx]);
  MwisResult best = results.front();
  for (std::size_t idx = 1; idx < results.size(); ++idx)
    if (improves(results[idx], best)) best = results[idx];
  return best;
}

std::vector<std::int64_t> parse_weights(std::string_view text) {
  std::vector<std::int64_t> out;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    std::int64_t w = 0;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), w);
    if (ec != std::errc() || ptr != line.data() + line.size()) {
      throw ParseError("weights line " + std::to_string(line_no) + ": expected one integer");
    }
    if (w < 0) throw ParseError("weights line " + std::to_string(line_no) + ": negative weight");
    out.push_back(w);
  }
  return out;
}

}  // namespace alphawidth
