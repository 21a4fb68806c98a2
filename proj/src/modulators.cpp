#include "alphawidth/modulators.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <climits>
#include <stdexcept>

#include <omp.h>

#include "alphawidth/base_params.hpp"
#include "alphawidth/kernels.hpp"
#include "alphawidth/widths.hpp"

namespace alphawidth {

TargetParam parse_target_param(std::string_view name) {
  if (name == "tw") return TargetParam::Treewidth;
  if (name == "pw") return TargetParam::Pathwidth;
  if (name == "td") return TargetParam::Treedepth;
  if (name == "chi") return TargetParam::Chromatic;
  if (name == "omega") return TargetParam::Clique;
  if (name == "delta") return TargetParam::MaxDegree;
  throw std::invalid_argument("unknown target parameter '" + std::string(name) +
                              "' (expected tw, pw, td, chi, omega or delta)");
}

std::string_view to_string(TargetParam rho) {
  switch (rho) {
    case TargetParam::Treewidth: return "tw";
    case TargetParam::Pathwidth: return "pw";
    case TargetParam::Treedepth: return "td";
    case TargetParam::Chromatic: return "chi";
    case TargetParam::Clique: return "omega";
    case TargetParam::MaxDegree: return "delta";
  }
  return "?";
}

ModulatorSpec parse_modulator_spec(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("modulator spec must look like rho:c, got '" + std::string(text) + "'");
  }
  ModulatorSpec spec;
  spec.rho = parse_target_param(text.substr(0, colon));
  auto num = text.substr(colon + 1);
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), spec.c);
  if (ec != std::errc() || ptr != num.data() + num.size() || spec.c < 0) {
    throw std::invalid_argument("modulator threshold must be a non-negative integer in '" + std::string(text) + "'");
  }
  return spec;
}

std::string to_string(const ModulatorSpec& spec) {
  return std::string(to_string(spec.rho)) + ":" + std::to_string(spec.c);
}

int target_value(const Graph& g, TargetParam rho, const Budgets& budgets) {
  constexpr auto kCard = CostKind::Cardinality;
  switch (rho) {
    case TargetParam::Treewidth: return lambda_treewidth(g, kCard, budgets).value;
    case TargetParam::Pathwidth: return lambda_pathwidth(g, kCard, budgets).value;
    case TargetParam::Treedepth: return lambda_treedepth(g, kCard, budgets).value;
    case TargetParam::Chromatic: return chromatic_number(g);
    case TargetParam::Clique: return clique_number(g);
    case TargetParam::MaxDegree: return max_degree(g);
  }
  return 0;
}

bool target_at_most(const Graph& g, TargetParam rho, int c, const Budgets& budgets) {
  if (g.order() == 0) return c >= 0;
  if (c <= 0 && rho != TargetParam::MaxDegree) return false;
  switch (rho) {
    case TargetParam::Treewidth:
    case TargetParam::Pathwidth:
    case TargetParam::Treedepth:
      if (c == 1) return g.edge_count() == 0;
      if (c == 2 && rho == TargetParam::Treewidth) return is_acyclic(g, g.vertices());
      if (c >= g.order()) return true;
      break;
    case TargetParam::Chromatic:
      if (c == 1) return g.edge_count() == 0;
      if (c == 2) return is_bipartite(g);
      break;
    case TargetParam::Clique:
    case TargetParam::MaxDegree: break;
  }
  return target_value(g, rho, budgets) <= c;
}

int lambda_target_value(const Graph& g, TargetParam rho, CostKind kind, const Budgets& budgets) {
  if (kind == CostKind::Cardinality) return target_value(g, rho, budgets);
  switch (rho) {
    case TargetParam::Treewidth: return lambda_treewidth(g, kind, budgets).value;
    case TargetParam::Pathwidth: return lambda_pathwidth(g, kind, budgets).value;
    case TargetParam::Treedepth: return lambda_treedepth(g, kind, budgets).value;
    case TargetParam::Chromatic: return alpha_chromatic(g, budgets).value;
    case TargetParam::Clique: return g.order() == 0 ? 0 : 1;
    case TargetParam::MaxDegree: return g.order() == 0 ? 0 : local_independence_number(g);
  }
  return 0;
}

namespace {

void require_order(const Graph& g, int limit, const char* solver) {
  if (g.order() > limit) {
    throw BudgetExceeded(std::string(solver) + " budget is " + std::to_string(limit) + " vertices, got " +
                         std::to_string(g.order()));
  }
}

bool is_modulator(const Graph& g, const ModulatorSpec& spec, std::uint32_t s, const Budgets& budgets) {
  return target_at_most(g.without(VertexSet::from_mask(s)), spec.rho, spec.c, budgets);
}

// Subsets of {0..n-1} with exactly k elements, in lex order of sorted lists.
template <class Visit>
bool for_each_k_subset(int n, int k, Visit&& visit) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return false;
  while (true) {
    std::uint32_t mask = 0;
    for (int v : idx) mask |= 1U << v;
    if (visit(mask)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
  return lex_less(VertexSet::from_mask(a), VertexSet::from_mask(b));
}

}  // namespace

ModulatorResult modulator_number(const Graph& g, const ModulatorSpec& spec, CostKind kind, const Budgets& budgets) {
  require_order(g, std::min(budgets.modulator_generic, 24), "modulator");
  const int n = g.order();
  ModulatorResult r;
  if (kind == CostKind::Cardinality) {
    for (int k = 0; k <= n; ++k) {
      bool found = for_each_k_subset(n, k, [&](std::uint32_t s) {
        if (!is_modulator(g, spec, s, budgets)) return false;
        r.value = k;
        r.witness = VertexSet::from_mask(s);
        return true;
      });
      if (found) return r;
    }
    throw std::logic_error("the full vertex set is always a modulator");
  }
  const auto table = SubsetAlphaTable::build_serial(g);
  const std::uint32_t full = n == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  // Supersets of modulators are modulators, so a level a admits a modulator
  // iff one of its maximal sets is one.
  int level = 0;
  for (;; ++level) {
    bool found = false;
    for (std::uint64_t s = 0; s <= full && !found; ++s) {
      if (table[s] > level) continue;
      bool maximal = true;
      for (std::uint32_t rest = full & ~s; rest && maximal; rest &= rest - 1) {
        if (table[s | (rest & (~rest + 1))] <= level) maximal = false;
      }
      if (maximal && is_modulator(g, spec, static_cast<std::uint32_t>(s), budgets)) found = true;
    }
    if (found) break;
  }
  std::vector<std::uint32_t> cands;
  for (std::uint64_t s = 0; s <= full; ++s)
    if (table[s] == level) cands.push_back(static_cast<std::uint32_t>(s));
  std::sort(cands.begin(), cands.end(), [](std::uint32_t a, std::uint32_t b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    return mask_lex_less(a, b);
  });
  for (std::uint32_t s : cands) {
    if (is_modulator(g, spec, s, budgets)) {
      r.value = level;
      r.witness = VertexSet::from_mask(s);
      return r;
    }
  }
  throw std::logic_error("modulator level search lost its witness");
}

std::vector<VertexSet> minimum_modulators(const Graph& g, const ModulatorSpec& spec, const Budgets& budgets) {
  const int k = modulator_number(g, spec, CostKind::Cardinality, budgets).value;
  std::vector<VertexSet> out;
  for_each_k_subset(g.order(), k, [&](std::uint32_t s) {
    if (is_modulator(g, spec, s, budgets)) {
      if (static_cast<long long>(out.size()) >= budgets.minimality_cap) {
        throw BudgetExceeded("more than " + std::to_string(budgets.minimality_cap) + " minimum modulators");
      }
      out.push_back(VertexSet::from_mask(s));
    }
    return false;
  });
  return out;
}

ModulatorResult vertex_cover_number(const Graph& g, const Budgets& budgets) {
  require_order(g, budgets.modulator_special, "vertex cover");
  IndependenceOracle oracle(g);
  const int alpha = oracle.alpha(g.vertices());
  // Grow the cover in ascending order while a maximum independent set still
  // fits in the rest.
  VertexSet in_cover;
  VertexSet in_set;
  for (int v = 0; v < g.order(); ++v) {
    VertexSet trial = in_cover;
    trial.insert(v);
    VertexSet free = g.vertices() - trial - in_set - g.neighborhood(in_set);
    if (in_set.size() + oracle.alpha(free) == alpha) {
      in_cover = trial;
    } else {
      in_set.insert(v);
    }
  }
  return {in_cover.size(), in_cover};
}

namespace {

using Mask = std::uint64_t;

class FvsSolver {
 public:
  explicit FvsSolver(const Graph& g) : n_(g.order()) {
    for (int v = 0; v < n_; ++v) adj_.push_back(g.mask(v));
  }

  // Whether G[alive] has a feedback vertex set of size <= k avoiding banned.
  bool at_most(Mask alive, Mask banned, int k) {
    alive = strip(alive);
    if (alive == 0) return true;
    if (k <= 0) return false;
    Mask cycle = shortest_cycle(alive);
    for (Mask rest = cycle & ~banned; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      if (at_most(alive & ~(Mask{1} << v), banned, k - 1)) return true;
    }
    return false;
  }

 private:
  // Repeatedly removes vertices of degree <= 1; they lie on no cycle.
  Mask strip(Mask alive) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Mask rest = alive; rest; rest &= rest - 1) {
        int v = std::countr_zero(rest);
        if (std::popcount(adj_[v] & alive) <= 1) {
          alive &= ~(Mask{1} << v);
          changed = true;
        }
      }
    }
    return alive;
  }

  // Vertex set of a shortest cycle of G[alive]; alive has minimum degree 2.
  Mask shortest_cycle(Mask alive) const {
    int best_len = INT_MAX;
    Mask best = 0;
    for (Mask roots = alive; roots; roots &= roots - 1) {
      int r = std::countr_zero(roots);
      std::vector<int> dist(static_cast<std::size_t>(n_), -1);
      std::vector<int> par(static_cast<std::size_t>(n_), -1);
      std::vector<int> queue{r};
      dist[r] = 0;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        int u = queue[i];
        for (Mask nb = adj_[u] & alive; nb; nb &= nb - 1) {
          int w = std::countr_zero(nb);
          if (dist[w] == -1) {
            dist[w] = dist[u] + 1;
            par[w] = u;
            queue.push_back(w);
          } else if (w != par[u] && dist[w] >= dist[u]) {
            int len = dist[u] + dist[w] + 1;
            if (len < best_len) {
              // Climb both tree paths to their meeting point.
              Mask cyc = 0;
              int x = u;
              int y = w;
              while (x != y) {
                if (dist[x] >= dist[y]) {
                  cyc |= Mask{1} << x;
                  x = par[x];
                } else {
                  cyc |= Mask{1} << y;
                  y = par[y];
                }
              }
              cyc |= Mask{1} << x;
              best_len = len;
              best = cyc;
            }
          }
        }
      }
    }
    return best;
  }

  int n_;
  std::vector<Mask> adj_;
};

}  // namespace

ModulatorResult feedback_vertex_number(const Graph& g, const Budgets& budgets) {
  require_order(g, std::min(budgets.modulator_special, 64), "feedback vertex set");
  const int n = g.order();
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  FvsSolver solver(g);
  int k = 0;
  while (!solver.at_most(all, 0, k)) ++k;
  Mask chosen = 0;
  Mask banned = 0;
  for (int v = 0; v < n; ++v) {
    const Mask b = Mask{1} << v;
    const int left = k - std::popcount(chosen) - 1;
    if (left >= 0 && solver.at_most(all & ~chosen & ~b, banned, left)) {
      chosen |= b;
    } else {
      banned |= b;
    }
  }
  return {k, VertexSet::from_mask(chosen)};
}

namespace {

class OctSolver {
 public:
  explicit OctSolver(const Graph& g) : n_(g.order()) {
    for (int v = 0; v < n_; ++v) adj_.push_back(g.mask(v));
  }

  // Assign vertices in ascending order to S (tried first), A or B with
  // |S| <= k; A and B must stay independent.
  bool search(int v, int budget, Mask a, Mask b, Mask s) {
    if (v == n_) {
      result_ = s;
      return true;
    }
    const Mask bit = Mask{1} << v;
    if (budget > 0 && search(v + 1, budget - 1, a, b, s | bit)) return true;
    if (!(adj_[v] & a) && search(v + 1, budget, a | bit, b, s)) return true;
    // The first non-S vertex goes to A; swapping sides gives the same S.
    if ((a | b) != 0 && !(adj_[v] & b) && search(v + 1, budget, a, b | bit, s)) return true;
    return false;
  }

  Mask result() const { return result_; }

 private:
  int n_;
  std::vector<Mask> adj_;
  Mask result_ = 0;
};

}  // namespace

ModulatorResult oct_number(const Graph& g, const Budgets& budgets) {
  require_order(g, std::min(budgets.modulator_special, 64), "odd cycle transversal");
  OctSolver solver(g);
  for (int k = 0;; ++k) {
    if (solver.search(0, k, 0, 0, 0)) return {k, VertexSet::from_mask(solver.result())};
  }
}

ModulatorResult lambda_vertex_cover(const Graph& g, CostKind kind, const Budgets& budgets) {
  if (kind == CostKind::Cardinality) return vertex_cover_number(g, budgets);
  return modulator_number(g, {TargetParam::Treewidth, 1}, kind, budgets);
}

ModulatorResult lambda_feedback_vertex_set(const Graph& g, CostKind kind, const Budgets& budgets) {
  if (kind == CostKind::Cardinality) return feedback_vertex_number(g, budgets);
  return modulator_number(g, {TargetParam::Treewidth, 2}, kind, budgets);
}

std::int64_t ramsey_upper(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("ramsey_upper needs a, b >= 1");
  // C(a+b-2, a-1) built as a running product of exact binomials.
  const int top = a + b - 2;
  const int r = std::min(a - 1, b - 1);
  std::int64_t value = 1;
  for (int i = 1; i <= r; ++i) {
    std::int64_t next = 0;
    if (__builtin_mul_overflow(value, static_cast<std::int64_t>(top - r + i), &next)) {
      throw std::overflow_error("ramsey_upper(" + std::to_string(a) + ", " + std::to_string(b) + ") overflows");
    }
    value = next / i;
  }
  return value;
}

std::int64_t binding_f(int p, int k) {
  if (p < 0 || k < 0) throw std::invalid_argument("binding_f needs p, k >= 0");
  return ramsey_upper(p + 1, k + 1) - 1;
}

namespace {

constexpr int kMaxRamseyOrder = 7;

void check_ramsey_args(int n, int a, int b) {
  if (n < 0 || a < 1 || b < 1) throw std::invalid_argument("ramsey_property_check needs n >= 0, a, b >= 1");
  if (n > kMaxRamseyOrder) throw BudgetExceeded("ramsey_property_check supports n <= 7");
}

// Whether the labeled graph with the given edge bits has K_a or an
// independent b-set.
bool has_clique_or_coclique(int n, std::uint64_t edges, int a, int b) {
  std::uint32_t adj[kMaxRamseyOrder] = {};
  int e = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++e) {
      if (edges >> e & 1U) {
        adj[i] |= 1U << j;
        adj[j] |= 1U << i;
      }
    }
  }
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    const int size = std::popcount(s);
    if (size != a && size != b) continue;
    bool clique = true;
    bool coclique = true;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      std::uint32_t others = s & ~(1U << v);
      if ((adj[v] & others) != others) clique = false;
      if (adj[v] & others) coclique = false;
    }
    if ((clique && size == a) || (coclique && size == b)) return true;
  }
  return false;
}

}  // namespace

bool ramsey_property_check(int n, int a, int b) {
  check_ramsey_args(n, a, b);
  const std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
  for (std::uint64_t e = 0; e < count; ++e)
    if (!has_clique_or_coclique(n, e, a, b)) return false;
  return true;
}

bool ramsey_property_check_parallel(int n, int a, int b, int threads) {
  check_ramsey_args(n, a, b);
  if (threads <= 0) threads = omp_get_max_threads();
  const std::int64_t count = std::int64_t{1} << (n * (n - 1) / 2);
  int all = 1;
#pragma omp parallel for schedule(static) num_threads(threads) reduction(&& : all)
  for (std::int64_t e = 0; e < count; ++e) {
    all = all && has_clique_or_coclique(n, static_cast<std::uint64_t>(e), a, b);
  }
  return all != 0;
}

namespace {

std::vector<VertexSet> all_maximum_independent_sets(const Graph& g, const VertexSet& s) {
  const auto members = s.to_vector();
  const int m = static_cast<int>(members.size());
  if (m > 24) throw BudgetExceeded("independent set enumeration supports at most 24 vertices");
  std::vector<VertexSet> best;
  int best_size = -1;
  for (std::uint32_t pick = 0; pick < (1U << m); ++pick) {
    VertexSet x;
    for (int i = 0; i < m; ++i)
      if (pick >> i & 1U) x.insert(members[i]);
    if (!g.is_independent(x)) continue;
    if (x.size() > best_size) {
      best_size = x.size();
      best.clear();
    }
    if (x.size() == best_size) best.push_back(x);
  }
  std::sort(best.begin(), best.end(), lex_less);
  return best;
}

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  for (int v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

}  // namespace

InvariantCheck check_modulator_minimality(const Graph& g, const ModulatorSpec& spec, const Budgets& budgets) {
  InvariantCheck out;
  for (const auto& s : minimum_modulators(g, spec, budgets)) {
    for (const auto& i : all_maximum_independent_sets(g, s)) {
      const Graph sub = g.induced((g.vertices() - s) | i);
      const int mu = modulator_number(sub, spec, CostKind::Cardinality, budgets).value;
      out.lhs = std::max(out.lhs, i.size());
      if (mu < i.size()) {
        out.ok = false;
        out.detail = "modulator " + set_text(s) + ", independent set " + set_text(i) + ": mu = " +
                     std::to_string(mu) + " < |I| = " + std::to_string(i.size());
        return out;
      }
    }
  }
  return out;
}

InvariantCheck check_modulator_slack(const Graph& g, const ModulatorSpec& spec, CostKind kind, const Budgets& budgets) {
  InvariantCheck out;
  out.lhs = lambda_target_value(g, spec.rho, kind, budgets);
  out.rhs = modulator_number(g, spec, kind, budgets).value + spec.c;
  out.ok = out.lhs <= out.rhs;
  if (!out.ok) {
    out.detail = std::string(to_string(kind)) + "-" + std::string(to_string(spec.rho)) + " = " +
                 std::to_string(out.lhs) + " > " + std::string(to_string(kind)) + "-mu(" + to_string(spec) +
                 ") + c = " + std::to_string(out.rhs);
  }
  return out;
}

}  // namespace alphawidth
