#include <doctest.h>

#include "alphawidth/base_params.hpp"
#include "alphawidth/generators.hpp"
#include "alphawidth/modulators.hpp"
#include "alphawidth/widths.hpp"
#include "oracles.hpp"

using namespace alphawidth;

namespace {
constexpr auto kCard = CostKind::Cardinality;
constexpr auto kAlpha = CostKind::Independence;

ModulatorSpec spec(const char* text) { return parse_modulator_spec(text); }
}  // namespace

TEST_CASE("modulator spec strings") {
  CHECK(spec("tw:1") == ModulatorSpec{TargetParam::Treewidth, 1});
  CHECK(spec("chi:2") == ModulatorSpec{TargetParam::Chromatic, 2});
  CHECK(spec("delta:0") == ModulatorSpec{TargetParam::MaxDegree, 0});
  CHECK(to_string(spec("omega:3")) == "omega:3");
  CHECK_THROWS(spec("tw"));
  CHECK_THROWS(spec("tw:-1"));
  CHECK_THROWS(spec("foo:1"));
}

TEST_CASE("modulator number examples") {
  auto r = modulator_number(complete_graph(4), spec("tw:1"), kCard);
  CHECK(r.value == 3);
  CHECK(r.witness == VertexSet{0, 1, 2});
  CHECK(modulator_number(cycle_graph(5), spec("chi:2"), kCard).value == 1);
  CHECK(modulator_number(star_graph(5), spec("delta:0"), kCard).value == 1);
  CHECK(modulator_number(empty_graph(4), spec("tw:1"), kCard).value == 0);
  CHECK(modulator_number(complete_graph(4), spec("tw:1"), kAlpha).value == 1);
  CHECK_THROWS_AS(modulator_number(empty_graph(30), spec("pw:1"), kCard), BudgetExceeded);
}

TEST_CASE("dedicated solvers") {
  CHECK(vertex_cover_number(disjoint_copies(3, complete_graph(2))).value == 3);
  CHECK(vertex_cover_number(complete_bipartite(3, 3)).value == 3);
  CHECK(feedback_vertex_number(cycle_graph(5)).value == 1);
  CHECK(feedback_vertex_number(path_graph(5)).value == 0);
  CHECK(oct_number(complete_graph(4)).value == 2);
  CHECK(oct_number(cycle_graph(6)).value == 0);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      auto vc = vertex_cover_number(g);
      auto fvs = feedback_vertex_number(g);
      auto oct = oct_number(g);
      CHECK(vc.value == oracle::vc(g));
      CHECK(fvs.value == oracle::fvs(g));
      CHECK(oct.value == oracle::oct(g));
      CHECK(g.is_independent(g.vertices() - vc.witness));
      CHECK(is_acyclic(g, g.vertices() - fvs.witness));
      CHECK(is_bipartite(g.without(oct.witness)));
    }
  }
}

TEST_CASE("dedicated solvers scale to 30 vertices") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto g = random_graph(30, 0.12, seed);
    auto vc = vertex_cover_number(g);
    auto fvs = feedback_vertex_number(g);
    auto oct = oct_number(g);
    CHECK(g.is_independent(g.vertices() - vc.witness));
    CHECK(is_acyclic(g, g.vertices() - fvs.witness));
    CHECK(is_bipartite(g.without(oct.witness)));
    CHECK(oct.value <= fvs.value);
    CHECK(fvs.value <= vc.value);
  }
}

TEST_CASE("lambda vertex cover and feedback vertex set") {
  auto k4 = complete_graph(4);
  CHECK(lambda_vertex_cover(k4, kCard).value == 3);
  CHECK(lambda_vertex_cover(k4, kAlpha).value == 1);
  CHECK(lambda_feedback_vertex_set(k4, kAlpha).value == 1);
  CHECK(lambda_vertex_cover(star_graph(4), kAlpha).value == 1);
  CHECK(lambda_vertex_cover(empty_graph(3), kAlpha).value == 0);
}

TEST_CASE("ramsey bounds") {
  CHECK(ramsey_upper(3, 3) == 6);
  CHECK(ramsey_upper(3, 2) == 3);
  CHECK(ramsey_upper(1, 7) == 1);
  CHECK(binding_f(2, 1) == 2);
  CHECK(binding_f(1, 0) == 0);
  CHECK_THROWS_AS(ramsey_upper(200, 200), std::overflow_error);
  CHECK(ramsey_property_check(6, 3, 3));
  CHECK_FALSE(ramsey_property_check(5, 3, 3));
  CHECK(ramsey_property_check(1, 1, 4));
  CHECK(ramsey_property_check_parallel(6, 3, 3));
  CHECK_FALSE(ramsey_property_check_parallel(5, 3, 3));
  CHECK_THROWS_AS(ramsey_property_check(9, 3, 3), BudgetExceeded);
}

TEST_CASE("ramsey property check agrees with enumeration") {
  for (int n = 1; n <= 6; ++n) {
    for (int a = 1; a <= 4; ++a) {
      for (int b = 1; b <= 4; ++b) {
        bool every = true;
        for (const auto& g : enumerate_graphs(n)) {
          if (clique_number(g) < a && independence_number(g) < b) every = false;
        }
        CHECK(ramsey_property_check(n, a, b) == every);
      }
    }
  }
}

TEST_CASE("minimality check") {
  auto two_k3 = disjoint_copies(2, complete_graph(3));
  auto r = check_modulator_minimality(two_k3, spec("tw:2"));
  CHECK(r.ok);
  CHECK(r.lhs == 2);
  CHECK(check_modulator_minimality(cycle_graph(5), spec("chi:2")).ok);
  auto e = check_modulator_minimality(empty_graph(4), spec("tw:1"));
  CHECK(e.ok);
  CHECK(e.lhs == 0);
}

TEST_CASE("slack check") {
  auto r = check_modulator_slack(cycle_graph(5), spec("tw:2"), kAlpha);
  CHECK(r.ok);
  CHECK(r.lhs == 2);
  CHECK(check_modulator_slack(complete_graph(4), spec("tw:1"), kCard).ok);
  CHECK(check_modulator_slack(path_graph(4), spec("td:1"), kCard).ok);
  for (int q = 2; q <= 8; ++q) CHECK_FALSE(check_modulator_slack(star_graph(q), spec("delta:0"), kCard).ok);
}

TEST_CASE("modulator numbers never grow on induced subgraphs") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      auto h = g.without(VertexSet{0});
      for (const char* s : {"tw:1", "pw:2", "td:2", "chi:2", "omega:1"}) {
        CHECK(modulator_number(h, spec(s), kCard).value <= modulator_number(g, spec(s), kCard).value);
      }
    }
  }
}

TEST_CASE("target values") {
  CHECK(target_value(complete_graph(4), TargetParam::Treewidth) == 4);
  CHECK(target_value(cycle_graph(5), TargetParam::Chromatic) == 3);
  CHECK(target_at_most(path_graph(6), TargetParam::Treewidth, 2));
  CHECK_FALSE(target_at_most(cycle_graph(3), TargetParam::Treewidth, 2));
  CHECK(target_at_most(Graph(0), TargetParam::Pathwidth, 0));
  CHECK(lambda_target_value(complete_graph(4), TargetParam::Clique, kAlpha) == 1);
  CHECK(lambda_target_value(star_graph(4), TargetParam::MaxDegree, kAlpha) == 4);
}
