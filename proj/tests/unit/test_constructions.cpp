#include <doctest.h>

#include <algorithm>

#include "alphawidth/base_params.hpp"
#include "alphawidth/constructions.hpp"
#include "alphawidth/generators.hpp"
#include "alphawidth/widths.hpp"

using namespace alphawidth;

namespace {

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.rbegin(), d.rend());
  return d;
}

}  // namespace

TEST_CASE("substitution kinds") {
  CHECK(parse_substitution_kind("s-claw") == SubstitutionKind::SClaw);
  CHECK(parse_substitution_kind("p5") == SubstitutionKind::P5);
  CHECK(parse_substitution_kind("net") == SubstitutionKind::Net);
  CHECK_THROWS(parse_substitution_kind("claw"));
}

TEST_CASE("s-claw substitution of K1") {
  auto s = substitute(complete_graph(1), SubstitutionKind::SClaw);
  CHECK(s.order() == 7);
  CHECK(s == gamma_family(2));
  // Copies 0..2, hubs 3..5, centre 6: each hub sees its copy and the centre.
  CHECK(degree_sequence(s) == std::vector<int>{3, 2, 2, 2, 1, 1, 1});
  CHECK(canonical_code(s) == canonical_code(subdivided_claw()));
}

TEST_CASE("substitution orders") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      auto s = substitute(g, SubstitutionKind::SClaw);
      CHECK(s.order() == 3 * n + 4);
      CHECK(clique_number(s) == std::max(clique_number(g) + 1, 2));
      CHECK(substitute(g, SubstitutionKind::P5).order() == 2 * n + 3);
      CHECK(substitute(g, SubstitutionKind::Net).order() == 3 * n + 3);
    }
  }
}

TEST_CASE("net of K1") {
  auto net = substitute(complete_graph(1), SubstitutionKind::Net);
  CHECK(net.order() == 6);
  CHECK(net.edge_count() == 6);
  CHECK(degree_sequence(net) == std::vector<int>{3, 3, 3, 1, 1, 1});
  CHECK(contains_induced(net, complete_graph(3)));
}

TEST_CASE("p5 of K1 is the path on five vertices") {
  auto p = substitute(complete_graph(1), SubstitutionKind::P5);
  CHECK(canonical_code(p) == canonical_code(path_graph(5)));
}

TEST_CASE("gamma family") {
  CHECK(gamma_family(1) == complete_graph(1));
  CHECK(gamma_family(2).order() == 7);
  CHECK(gamma_family(3).order() == 25);
  CHECK(gamma_family(4).order() == 79);
  CHECK(gamma_family(5).order() == 241);
  CHECK_THROWS(gamma_family(0));
  CHECK_THROWS(gamma_family(6));
  for (int n = 1; n <= 3; ++n) {
    auto s = gamma_family(n);
    CHECK(clique_number(s) == n);
    CHECK(is_chordal(s));
    for (const auto& h : {path_graph(6), cycle_graph(4), cycle_graph(5), cycle_graph(6)}) {
      CHECK_FALSE(contains_induced(s, h));
    }
  }
}

TEST_CASE("subdivided claw") {
  auto c = subdivided_claw();
  CHECK(c.order() == 7);
  CHECK(degree_sequence(c) == std::vector<int>{3, 2, 2, 2, 1, 1, 1});
  CHECK_FALSE(contains_induced(c, complete_graph(3)));
}

TEST_CASE("substitutions raise alpha widths by one on small graphs") {
  constexpr auto A = CostKind::Independence;
  for (int n = 1; n <= 3; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      const int pw = lambda_pathwidth(g, A).value;
      const int td = lambda_treedepth(g, A).value;
      CHECK(lambda_pathwidth(substitute(g, SubstitutionKind::SClaw), A).value == pw + 1);
      CHECK(lambda_pathwidth(substitute(g, SubstitutionKind::Net), A).value == pw + 1);
      CHECK(lambda_treedepth(substitute(g, SubstitutionKind::P5), A).value == td + 1);
    }
  }
}
