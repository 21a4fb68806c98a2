#include "alphawidth/graph.hpp"

#include <algorithm>
#include <numeric>

namespace alphawidth {

VertexSet VertexSet::range(int n) {
  VertexSet s;
  for (int i = 0; i < kWords && n > 0; ++i, n -= 64) {
    s.words_[i] = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }
  return s;
}

int VertexSet::next(int v) const {
  ++v;
  if (v >= kMaxVertices) return -1;
  int i = v >> 6;
  std::uint64_t w = words_[i] & (~std::uint64_t{0} << (v & 63));
  while (true) {
    if (w) return i * 64 + std::countr_zero(w);
    if (++i == kWords) return -1;
    w = words_[i];
  }
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(size());
  for (int v : *this) out.push_back(v);
  return out;
}

std::size_t VertexSet::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  int x = a.first();
  int y = b.first();
  while (x != -1 && y != -1) {
    if (x != y) return x < y;
    x = a.next(x);
    y = b.next(y);
  }
  return x == -1 && y != -1;
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("graph order " + std::to_string(n) + " outside 0.." +
                                std::to_string(kMaxVertices));
  }
  adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                ") out of range for order " + std::to_string(n_));
  }
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  adj_[u].insert(v);
  adj_[v].insert(u);
}

VertexSet Graph::neighborhood(const VertexSet& s) const {
  VertexSet out;
  for (int v : s) out |= adj_[v];
  return out - s;
}

int Graph::edge_count() const {
  int twice = 0;
  for (const auto& a : adj_) twice += a.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v = adj_[u].next(u); v != -1; v = adj_[u].next(v)) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const VertexSet& keep, std::vector<int>* old_to_new) const {
  std::vector<int> map(static_cast<std::size_t>(n_), -1);
  int k = 0;
  for (int v : keep) {
    if (v < n_) map[v] = k++;
  }
  Graph h(k);
  for (int u : keep) {
    if (u >= n_) continue;
    for (int v : adj_[u] & keep) {
      if (u < v) h.add_edge(map[u], map[v]);
    }
  }
  if (old_to_new) *old_to_new = std::move(map);
  return h;
}

Graph Graph::complement() const {
  Graph h(n_);
  for (int u = 0; u < n_; ++u) {
    VertexSet row = vertices() - adj_[u];
    row.erase(u);
    h.adj_[u] = row;
  }
  return h;
}

Graph Graph::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
  Graph h(n_);
  for (auto [u, v] : edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

Graph Graph::disjoint_union(const Graph& other) const {
  Graph h(n_ + other.n_);
  for (auto [u, v] : edges()) h.add_edge(u, v);
  for (auto [u, v] : other.edges()) h.add_edge(u + n_, v + n_);
  return h;
}

bool Graph::is_independent(const VertexSet& s) const {
  for (int v : s)
    if (adj_[v].intersects(s)) return false;
  return true;
}

bool Graph::is_clique(const VertexSet& s) const {
  for (int v : s) {
    VertexSet others = s;
    others.erase(v);
    if (!others.is_subset_of(adj_[v])) return false;
  }
  return true;
}

WeightedGraph::WeightedGraph(Graph g, std::vector<std::int64_t> w)
    : graph(std::move(g)), weights(std::move(w)) {
  if (static_cast<int>(weights.size()) != graph.order()) {
    throw std::invalid_argument("weight vector has " + std::to_string(weights.size()) +
                                " entries for " + std::to_string(graph.order()) + " vertices");
  }
  for (auto x : weights)
    if (x < 0) throw std::invalid_argument("negative vertex weight");
}

std::int64_t WeightedGraph::weight_of(const VertexSet& s) const {
  std::int64_t total = 0;
  for (int v : s) total += weights[v];
  return total;
}

std::int64_t WeightedGraph::total_weight() const {
  return std::accumulate(weights.begin(), weights.end(), std::int64_t{0});
}

}  // namespace alphawidth
