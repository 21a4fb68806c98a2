#include <doctest.h>

#include <set>

#include "alphawidth/base_params.hpp"
#include "alphawidth/constructions.hpp"
#include "alphawidth/generators.hpp"
#include "alphawidth/graph_io.hpp"
#include "oracles.hpp"

using namespace alphawidth;

TEST_CASE("order") {
  CHECK(complete_graph(1).order() == 1);
  CHECK(gamma_family(2).order() == 7);
  CHECK(gamma_family(3).order() == 25);
}

TEST_CASE("independence number") {
  CHECK(independence_number(cycle_graph(5)) == 2);
  CHECK(independence_number(complete_bipartite(3, 3)) == 3);
  CHECK(independence_number(disjoint_copies(4, complete_graph(2))) == 4);
  CHECK(independence_number(Graph(0)) == 0);
  auto s = maximum_independent_set(cycle_graph(5));
  CHECK(s == VertexSet{0, 2});
}

TEST_CASE("clique number") {
  CHECK(clique_number(complete_graph(4)) == 4);
  for (int n = 1; n <= 5; ++n) CHECK(clique_number(complete_bipartite(n, n)) == 2);
  CHECK(clique_number(gamma_family(3)) == 3);
  CHECK(maximum_clique(complete_graph(3)) == VertexSet{0, 1, 2});
}

TEST_CASE("chromatic number") {
  CHECK(chromatic_number(cycle_graph(5)) == 3);
  CHECK(chromatic_number(complete_bipartite(2, 3)) == 2);
  CHECK(chromatic_number(complete_graph(5)) == 5);
  CHECK(chromatic_number(Graph(0)) == 0);
  std::vector<int> coloring;
  auto g = cycle_graph(7);
  chromatic_number(g, &coloring);
  for (auto [u, v] : g.edges()) CHECK(coloring[u] != coloring[v]);
}

TEST_CASE("degrees") {
  CHECK(max_degree(star_graph(5)) == 5);
  CHECK(max_degree(cycle_graph(7)) == 2);
  CHECK(max_degree(complete_graph(1)) == 0);
  CHECK(local_independence_number(star_graph(3)) == 3);
  CHECK(local_independence_number(complete_graph(4)) == 1);
  CHECK(local_independence_number(cycle_graph(5)) == 2);
  CHECK(local_independence_number(empty_graph(3)) == 0);
  CHECK_THROWS(local_independence_number(Graph(0)));
}

TEST_CASE("bipartite and chordal predicates") {
  CHECK(is_bipartite(cycle_graph(4)));
  CHECK_FALSE(is_bipartite(cycle_graph(5)));
  CHECK(is_bipartite(Graph(0)));
  auto side = bipartition(complete_bipartite(2, 3));
  REQUIRE(side);
  for (auto [u, v] : complete_bipartite(2, 3).edges()) CHECK((*side)[u] != (*side)[v]);

  CHECK(is_chordal(gamma_family(3)));
  CHECK_FALSE(is_chordal(cycle_graph(4)));
  CHECK(is_chordal(path_graph(6)));
  CHECK(is_chordal(star_graph(4)));
}

TEST_CASE("induced subgraph containment") {
  CHECK(contains_induced(cycle_graph(5), path_graph(4)));
  CHECK_FALSE(contains_induced(gamma_family(3), path_graph(6)));
  CHECK_FALSE(contains_induced(complete_graph(3), complete_graph(4)));
  CHECK_FALSE(contains_induced(cycle_graph(5), cycle_graph(4)));
}

TEST_CASE("chordality agrees with forbidden long cycles up to 7 vertices") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      bool long_hole = false;
      for (int k = 4; k <= n; ++k) long_hole = long_hole || contains_induced(g, cycle_graph(k));
      CHECK(is_chordal(g) == !long_hole);
    }
  }
}

TEST_CASE("matching") {
  CHECK(max_matching_size(disjoint_copies(3, complete_graph(2))) == 3);
  CHECK(max_matching_size(path_graph(4)) == 2);
  CHECK(max_matching_size(complete_graph(1)) == 0);
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_graphs(0).size() == 1);
  CHECK(enumerate_graphs(3).size() == 4);
  CHECK(enumerate_graphs(4).size() == 11);
  CHECK(enumerate_graphs(7).size() == 1044);
  CHECK_THROWS_AS(enumerate_graphs(9), BudgetExceeded);
  for (int n = 1; n <= 6; ++n) {
    auto gs = enumerate_graphs(n);
    CHECK(gs.size() == oracle::isomorphism_classes(n));
    std::set<std::uint64_t> codes;
    for (const auto& g : gs) codes.insert(canonical_code(g));
    CHECK(codes.size() == gs.size());
  }
}

TEST_CASE("named and random graphs") {
  auto p3 = named_graph("P3");
  CHECK(p3.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(named_graph("2xK2") == disjoint_copies(2, complete_graph(2)));
  CHECK(named_graph("K{2,3}") == complete_bipartite(2, 3));
  CHECK(random_graph(5, 0.5, 1) == random_graph(5, 0.5, 1));
  CHECK(is_bipartite(random_bipartite_graph(12, 0.6, 3)));
  CHECK_THROWS(named_graph("Q7"));
  CHECK_THROWS(random_graph(4, 1.5, 1));
}

TEST_CASE("graph6 round trip") {
  auto g = parse_graph6("D?{");
  CHECK(g.order() == 5);
  CHECK(to_graph6(g) == "D?{");
  for (int n = 0; n <= 6; ++n)
    for (const auto& h : enumerate_graphs(n)) CHECK(parse_graph6(to_graph6(h)) == h);
  auto big = gamma_family(4);
  CHECK(parse_graph6(to_graph6(big)) == big);
  CHECK_THROWS_AS(parse_graph6("D?"), ParseError);
}

TEST_CASE("dimacs and edge list") {
  CHECK(parse_dimacs("p edge 2 1\ne 1 2\n") == complete_graph(2));
  CHECK_THROWS_AS(parse_edge_list("0 0"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 3\n"), ParseError);
  auto g = cycle_graph(5);
  CHECK(parse_dimacs(to_dimacs(g)) == g);
  CHECK(parse_edge_list(to_edge_list(g)) == g);
}

TEST_CASE("base parameters match brute force and are relabeling invariant") {
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t seed = 100;
    for (const auto& g : enumerate_graphs(n)) {
      CHECK(independence_number(g) == oracle::alpha(g));
      CHECK(clique_number(g) == oracle::omega(g));
      CHECK(chromatic_number(g) == oracle::chromatic(g));
      CHECK(max_matching_size(g) == oracle::matching(g));
      auto h = g.permuted(random_permutation(n, seed++));
      CHECK(independence_number(h) == independence_number(g));
      CHECK(clique_number(h) == clique_number(g));
      CHECK(chromatic_number(h) == chromatic_number(g));
      CHECK(max_degree(h) == max_degree(g));
      CHECK(canonical_code(h) == canonical_code(g));
    }
  }
}

TEST_CASE("alpha, omega, chi never grow when a vertex is deleted") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      for (int v = 0; v < n; ++v) {
        auto h = g.without(VertexSet{v});
        CHECK(independence_number(h) <= independence_number(g));
        CHECK(clique_number(h) <= clique_number(g));
        CHECK(chromatic_number(h) <= chromatic_number(g));
      }
    }
  }
}

TEST_CASE("independence oracle on a large sparse graph") {
  auto g = gamma_family(4);
  CHECK(g.order() == 79);
  CHECK(clique_number(g) == 4);
  CHECK(independence_number(g) > 0);
}
