#include "alphawidth/generators.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <random>
#include <unordered_set>

#include "alphawidth/constructions.hpp"

namespace alphawidth {

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int s) {
  if (s < 0) throw std::invalid_argument("path order must be non-negative");
  Graph g(s);
  for (int i = 0; i + 1 < s; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int s) {
  if (s < 3) throw std::invalid_argument("cycle order must be at least 3");
  Graph g = path_graph(s);
  g.add_edge(s - 1, 0);
  return g;
}

Graph complete_graph(int s) {
  if (s < 0) throw std::invalid_argument("clique order must be non-negative");
  Graph g(s);
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) g.add_edge(i, j);
  return g;
}

Graph complete_bipartite(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("K_{p,q} sides must be non-negative");
  Graph g(p + q);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) g.add_edge(i, p + j);
  return g;
}

Graph star_graph(int q) { return complete_bipartite(1, q); }

Graph disjoint_copies(int r, const Graph& h) {
  if (r < 0) throw std::invalid_argument("copy count must be non-negative");
  Graph g(r * h.order());
  for (int i = 0; i < r; ++i)
    for (auto [u, v] : h.edges()) g.add_edge(i * h.order() + u, i * h.order() + v);
  return g;
}

namespace {

int parse_count(std::string_view s, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value < 0) {
    throw std::invalid_argument("bad parameter in named graph '" + std::string(whole) + "'");
  }
  return value;
}

Graph named_base(std::string_view name, std::string_view whole) {
  if (name.starts_with("star")) return star_graph(parse_count(name.substr(4), whole));
  if (name.empty()) throw std::invalid_argument("empty graph name");
  std::string_view rest = name.substr(1);
  if (!rest.empty() && rest.front() == '_') rest.remove_prefix(1);
  switch (name.front()) {
    case 'P': return path_graph(parse_count(rest, whole));
    case 'C': return cycle_graph(parse_count(rest, whole));
    case 'S': return gamma_family(parse_count(rest, whole));
    case 'E': return empty_graph(parse_count(rest, whole));
    case 'K': {
      if (rest.starts_with("{") && rest.ends_with("}")) rest = rest.substr(1, rest.size() - 2);
      auto comma = rest.find(',');
      if (comma == std::string_view::npos) return complete_graph(parse_count(rest, whole));
      return complete_bipartite(parse_count(rest.substr(0, comma), whole),
                                parse_count(rest.substr(comma + 1), whole));
    }
    default: break;
  }
  throw std::invalid_argument("unknown named graph '" + std::string(whole) + "'");
}

}  // namespace

Graph named_graph(std::string_view name) {
  if (auto x = name.find('x'); x != std::string_view::npos && x > 0) {
    return disjoint_copies(parse_count(name.substr(0, x), name), named_base(name.substr(x + 1), name));
  }
  std::size_t digits = 0;
  while (digits < name.size() && std::isdigit(static_cast<unsigned char>(name[digits]))) ++digits;
  if (digits > 0) {
    return disjoint_copies(parse_count(name.substr(0, digits), name), named_base(name.substr(digits), name));
  }
  return named_base(name, name);
}

namespace {

// Uniform double in [0, 1) from the top 53 bits, identical on every platform.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must be in [0, 1]");
}

}  // namespace

Graph random_graph(int n, double p, std::uint64_t seed) {
  check_probability(p);
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (unit(rng) < p) g.add_edge(i, j);
  return g;
}

Graph random_bipartite_graph(int n, double p, std::uint64_t seed) {
  check_probability(p);
  std::mt19937_64 rng(seed);
  std::vector<int> side(static_cast<std::size_t>(n));
  for (auto& s : side) s = static_cast<int>(rng() & 1U);
  Graph g(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (side[i] != side[j] && unit(rng) < p) g.add_edge(i, j);
  return g;
}

std::vector<int> random_permutation(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

namespace {

constexpr int kMaxCodeOrder = 11;

int code_bits(int n) { return n * (n - 1) / 2; }

// Branch and bound over placements: position j fixes the contiguous code
// block of pairs (0,j)..(j-1,j), so every prefix of positions determines a
// prefix of the code.
class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()), total_(code_bits(n_)) {
    place_.assign(static_cast<std::size_t>(n_), -1);
  }

  void run() {
    best_ = ~std::uint64_t{0};
    if (n_ <= 1) {
      best_ = 0;
      best_perm_.assign(static_cast<std::size_t>(n_), 0);
      return;
    }
    search(0, 0, VertexSet());
  }

  std::uint64_t code() const { return best_; }
  /// best_perm_[position] = original vertex
  const std::vector<int>& placement() const { return best_perm_; }

 private:
  void search(int j, std::uint64_t prefix, VertexSet used) {
    if (j == n_) {
      if (prefix < best_) {
        best_ = prefix;
        best_perm_ = place_;
      }
      return;
    }
    const int bits_after = total_ - code_bits(j + 1);
    for (int u = 0; u < n_; ++u) {
      if (used.contains(u)) continue;
      std::uint64_t block = 0;
      for (int i = 0; i < j; ++i) block = (block << 1) | (g_.adjacent(place_[i], u) ? 1U : 0U);
      std::uint64_t next = prefix | (block << bits_after);
      // Compare on the bits fixed so far; best_ has the same layout.
      std::uint64_t fixed_mask = bits_after >= 64 ? 0 : (~std::uint64_t{0} << bits_after);
      if (best_ != ~std::uint64_t{0} && (next & fixed_mask) > (best_ & fixed_mask)) continue;
      place_[j] = u;
      VertexSet nu = used;
      nu.insert(u);
      search(j + 1, next, nu);
    }
    place_[j] = -1;
  }

  const Graph& g_;
  int n_;
  int total_;
  std::vector<int> place_;
  std::vector<int> best_perm_;
  std::uint64_t best_ = 0;
};

}  // namespace

std::uint64_t adjacency_code(const Graph& g) {
  if (g.order() > kMaxCodeOrder) throw BudgetExceeded("adjacency code supports at most 11 vertices");
  std::uint64_t code = 0;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(i, j) ? 1U : 0U);
  return code;
}

std::uint64_t canonical_code(const Graph& g) {
  if (g.order() > kMaxCodeOrder) throw BudgetExceeded("canonical form supports at most 11 vertices");
  Canonizer c(g);
  c.run();
  return c.code();
}

Graph canonical_form(const Graph& g) {
  if (g.order() > kMaxCodeOrder) throw BudgetExceeded("canonical form supports at most 11 vertices");
  Canonizer c(g);
  c.run();
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  const auto& place = c.placement();
  for (int pos = 0; pos < g.order(); ++pos) perm[place[pos]] = pos;
  return g.permuted(perm);
}

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 0) throw std::invalid_argument("order must be non-negative");
  if (n > kMaxEnumerationOrder) {
    throw BudgetExceeded("enumerate_graphs supports n <= " + std::to_string(kMaxEnumerationOrder));
  }
  std::vector<Graph> level{Graph(0)};
  for (int k = 1; k <= n; ++k) {
    // Every graph on k vertices is some (k-1)-vertex class plus a new vertex.
    std::map<std::uint64_t, Graph> seen;
    for (const auto& parent : level) {
      for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (k - 1)); ++nb) {
        Graph child(k);
        for (auto [u, v] : parent.edges()) child.add_edge(u, v);
        for (int u = 0; u < k - 1; ++u)
          if (nb >> u & 1U) child.add_edge(u, k - 1);
        Canonizer c(child);
        c.run();
        if (seen.contains(c.code())) continue;
        std::vector<int> perm(static_cast<std::size_t>(k));
        for (int pos = 0; pos < k; ++pos) perm[c.placement()[pos]] = pos;
        seen.emplace(c.code(), child.permuted(perm));
      }
    }
    level.clear();
    for (auto& [code, g] : seen) level.push_back(std::move(g));
  }
  return level;
}

}  // namespace alphawidth
