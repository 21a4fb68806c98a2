#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "alphawidth/graph.hpp"

namespace alphawidth {

Graph empty_graph(int n);
/// P_s: path 0-1-...-(s-1).
Graph path_graph(int s);
/// C_s, s >= 3.
Graph cycle_graph(int s);
Graph complete_graph(int s);
/// K_{p,q}: left side 0..p-1, right side p..p+q-1.
Graph complete_bipartite(int p, int q);
/// K_{1,q} with center 0.
Graph star_graph(int q);
/// r disjoint copies of h, copy i on ids i*|h| ...
Graph disjoint_copies(int r, const Graph& h);

/// Named graphs: "P5", "C6", "K4", "K3,3", "star5", "S3" (the Γ family),
/// and an optional copy-count prefix written with an 'x', e.g. "2xK2" or
/// "3xK3". "nK2"-style shorthand is also accepted when the copy count is
/// followed directly by K/P/C ("2K2", "3K3").
Graph named_graph(std::string_view name);

/// G(n, p), deterministic in seed.
Graph random_graph(int n, double p, std::uint64_t seed);
/// Random bipartite graph: each vertex gets a random side, cross pairs are
/// edges with probability p.
Graph random_bipartite_graph(int n, double p, std::uint64_t seed);
/// Random permutation of 0..n-1.
std::vector<int> random_permutation(int n, std::uint64_t seed);

/// Adjacency code over the upper triangle in column order (0,1),(0,2),(1,2),
/// (0,3),... with the first pair as the most significant bit. Requires n <= 11.
std::uint64_t adjacency_code(const Graph& g);
/// Isomorphic copy whose adjacency code is minimal over all relabelings.
/// Requires n <= 11; intended for n <= 8.
Graph canonical_form(const Graph& g);
std::uint64_t canonical_code(const Graph& g);

inline constexpr int kMaxEnumerationOrder = 8;

/// One representative (in canonical labeling) per isomorphism class of graphs
/// on exactly n vertices, sorted by canonical code. Throws BudgetExceeded for
/// n > kMaxEnumerationOrder.
std::vector<Graph> enumerate_graphs(int n);

}  // namespace alphawidth
