#include <doctest.h>

#include "alphawidth/base_params.hpp"
#include "alphawidth/generators.hpp"
#include "alphawidth/modulators.hpp"
#include "alphawidth/mwis.hpp"
#include "oracles.hpp"

#include <random>

using namespace alphawidth;

namespace {

WeightedGraph weighted(Graph g, std::vector<std::int64_t> w) { return WeightedGraph(std::move(g), std::move(w)); }

std::vector<std::int64_t> random_weights(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::int64_t> w(n);
  for (auto& x : w) x = static_cast<std::int64_t>(rng() % 101);
  return w;
}

}  // namespace

TEST_CASE("weighted graph validation") {
  CHECK_THROWS(weighted(path_graph(3), {1, 2}));
  CHECK_THROWS(weighted(path_graph(2), {1, -1}));
}

TEST_CASE("exact mwis examples") {
  auto r = mwis_exact(weighted(path_graph(3), {2, 1, 2}));
  CHECK(r.weight == 4);
  CHECK(r.set == VertexSet{0, 2});
  CHECK(mwis_exact(weighted(complete_graph(4), {5, 1, 1, 1})).weight == 5);
  CHECK(mwis_exact(weighted(empty_graph(3), {1, 2, 3})).weight == 6);
  auto z = mwis_exact(weighted(empty_graph(3), {0, 2, 0}));
  CHECK(z.set == VertexSet{1});
}

TEST_CASE("bipartite mwis examples") {
  CHECK(mwis_bipartite(weighted(complete_bipartite(3, 3), {1, 1, 1, 2, 2, 2})).weight == 6);
  CHECK(mwis_bipartite(weighted(cycle_graph(4), {1, 1, 1, 1})).weight == 2);
  CHECK(mwis_bipartite(weighted(path_graph(2), {7, 7})).weight == 7);
  CHECK_THROWS(mwis_bipartite(weighted(cycle_graph(5), {1, 1, 1, 1, 1})));
}

TEST_CASE("odd cycle transversal with bounded alpha") {
  auto s = find_oct_with_bounded_alpha(cycle_graph(5), 1);
  REQUIRE(s);
  CHECK(s->size() == 1);
  auto b = find_oct_with_bounded_alpha(cycle_graph(6), 0);
  REQUIRE(b);
  CHECK(b->empty());
  auto k5 = complete_graph(5);
  auto c = find_oct_with_bounded_alpha(k5, 1);
  REQUIRE(c);
  CHECK(c->size() == 3);
  CHECK(k5.is_clique(*c));
  CHECK_FALSE(find_oct_with_bounded_alpha(cycle_graph(5), 0));
  CHECK_THROWS_AS(find_oct_with_bounded_alpha(empty_graph(21), 0), BudgetExceeded);
}

TEST_CASE("mwis through an odd cycle transversal") {
  CHECK(mwis_via_oct(weighted(cycle_graph(5), {1, 1, 1, 1, 1}), 1).weight == 2);
  auto bip = weighted(complete_bipartite(2, 3), {4, 4, 3, 3, 3});
  CHECK(mwis_via_oct(bip, 0).weight == mwis_bipartite(bip).weight);
  CHECK(mwis_via_oct(weighted(complete_graph(4), {5, 1, 1, 1}), 1).weight == 5);
  CHECK_THROWS(mwis_via_oct(weighted(cycle_graph(5), {1, 1, 1, 1, 1}), 0));
}

TEST_CASE("max flow") {
  FlowNetwork one(3, 0, 2);
  one.add_arc(0, 1, 3);
  one.add_arc(1, 2, 3);
  CHECK(max_flow(one).value == 3);
  FlowNetwork two(4, 0, 3);
  two.add_arc(0, 1, 1);
  two.add_arc(1, 3, 1);
  two.add_arc(0, 2, 1);
  two.add_arc(2, 3, 1);
  CHECK(max_flow(two).value == 2);
  // Network of K_{3,3} with left weights 1 and right weights 2.
  FlowNetwork k33(8, 6, 7);
  for (int v = 0; v < 3; ++v) k33.add_arc(6, v, 1);
  for (int v = 3; v < 6; ++v) k33.add_arc(v, 7, 2);
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) k33.add_arc(u, v, 10);
  auto cut = max_flow(k33);
  CHECK(cut.value == 3);
  CHECK_THROWS(FlowNetwork(2, 0, 0));
  CHECK_THROWS(one.add_arc(0, 5, 1));
  CHECK_THROWS(one.add_arc(0, 1, -1));
}

TEST_CASE("solvers agree with brute force") {
  std::uint64_t seed = 1;
  for (int n = 1; n <= 7; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      auto wg = weighted(g, random_weights(n, seed++));
      auto want = oracle::mwis(g, wg.weights);
      auto exact = mwis_exact(wg);
      CHECK(exact.weight == want);
      CHECK(g.is_independent(exact.set));
      CHECK(wg.weight_of(exact.set) == exact.weight);
      auto oct = find_oct_with_bounded_alpha(g, n);
      REQUIRE(oct);
      const int k = independence_number(g.induced(*oct));
      auto via = mwis_via_oct(wg, k);
      CHECK(via.weight == want);
      CHECK(g.is_independent(via.set));
      CHECK(mwis_via_oct_parallel(wg, k, 2).set == via.set);
      if (is_bipartite(g)) CHECK(mwis_bipartite(wg).weight == want);
    }
  }
}

TEST_CASE("bipartite unit weights: independence plus vertex cover is the order") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto g = random_bipartite_graph(14, 0.3, seed);
    auto r = mwis_bipartite(weighted(g, std::vector<std::int64_t>(14, 1)));
    CHECK(r.weight + vertex_cover_number(g).value == 14);
  }
}

TEST_CASE("weights file") {
  CHECK(parse_weights("1\n2\n 3 \n") == std::vector<std::int64_t>{1, 2, 3});
  CHECK_THROWS_AS(parse_weights("1\n-2\n"), ParseError);
  CHECK_THROWS_AS(parse_weights("x\n"), ParseError);
}
