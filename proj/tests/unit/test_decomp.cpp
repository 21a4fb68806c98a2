#include <doctest.h>

#include "alphawidth/base_params.hpp"
#include "alphawidth/constructions.hpp"
#include "alphawidth/decomposition.hpp"
#include "alphawidth/generators.hpp"
#include "alphawidth/modulators.hpp"
#include "alphawidth/widths.hpp"
#include "oracles.hpp"

using namespace alphawidth;

namespace {

constexpr auto kCard = CostKind::Cardinality;
constexpr auto kAlpha = CostKind::Independence;

RootedForest forest(std::vector<int> parent) {
  RootedForest f(static_cast<int>(parent.size()));
  f.parent = std::move(parent);
  return f;
}

bool has_kind(const std::vector<Violation>& vs, ViolationKind k) {
  for (const auto& v : vs)
    if (v.kind == k) return true;
  return false;
}

}  // namespace

TEST_CASE("cost kind names") {
  CHECK(parse_cost_kind("card") == kCard);
  CHECK(parse_cost_kind("alpha") == kAlpha);
  CHECK(parse_cost_kind("independence") == kAlpha);
  CHECK_THROWS(parse_cost_kind("weird"));
}

TEST_CASE("tree decomposition validation") {
  TreeDecomposition one{{VertexSet{0, 1, 2}}, {}};
  CHECK(validate_tree_decomposition(complete_graph(3), one).empty());

  TreeDecomposition p3{{VertexSet{0, 1}, VertexSet{1, 2}}, {{0, 1}}};
  CHECK(validate_tree_decomposition(path_graph(3), p3).empty());

  TreeDecomposition broken{{VertexSet{0}, VertexSet{1, 2}}, {{0, 1}}};
  auto vs = validate_tree_decomposition(path_graph(3), broken);
  REQUIRE(vs.size() == 1);
  CHECK(vs[0] == Violation{ViolationKind::EdgeUncovered, 0, 1});

  TreeDecomposition gap{{VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{0, 2}}, {{0, 1}, {1, 2}}};
  CHECK(has_kind(validate_tree_decomposition(cycle_graph(3), gap), ViolationKind::DisconnectedOccurrence));

  TreeDecomposition cyc{{VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{0, 2}}, {{0, 1}, {1, 2}, {2, 0}}};
  CHECK(has_kind(validate_tree_decomposition(cycle_graph(3), cyc), ViolationKind::NotATree));

  TreeDecomposition missing{{VertexSet{0, 1}}, {}};
  CHECK(has_kind(validate_tree_decomposition(path_graph(3), missing), ViolationKind::VertexUncovered));
}

TEST_CASE("treedepth validation") {
  CHECK(validate_treedepth_decomposition(complete_graph(3), forest({-1, 0, 1})).empty());
  CHECK(validate_treedepth_decomposition(path_graph(3), forest({1, -1, 1})).empty());
  // 2K2 = edges 0-1 and 2-3; chain 0 -> 2 with 1, 3 as unrelated leaves.
  auto two = disjoint_copies(2, complete_graph(2));
  auto vs = validate_treedepth_decomposition(two, forest({-1, 2, 0, 1}));
  CHECK(vs.empty());
  // Root 0 with children 1, 2; 3 under 1, so 2 and 3 are incomparable.
  vs = validate_treedepth_decomposition(two, forest({-1, 0, 0, 1}));
  CHECK(has_kind(vs, ViolationKind::EdgeNotAncestral));
  CHECK(has_kind(validate_treedepth_decomposition(path_graph(2), forest({1, 0})), ViolationKind::MalformedForest));
}

TEST_CASE("forest helpers") {
  auto chain = forest({-1, 0, 1});
  CHECK(transitive_closure(chain) == complete_graph(3));
  CHECK(depth(chain) == 3);
  CHECK(root_to_leaf_sets(chain) == std::vector<VertexSet>{VertexSet{0, 1, 2}});

  auto isolated = forest({-1, -1});
  CHECK(transitive_closure(isolated).edge_count() == 0);
  CHECK(depth(isolated) == 1);

  auto cherry = forest({-1, 0, 0});
  CHECK(depth(cherry) == 2);
  CHECK(root_to_leaf_sets(cherry) == std::vector<VertexSet>{VertexSet{0, 1}, VertexSet{0, 2}});
}

TEST_CASE("cost") {
  TreeDecomposition k3{{VertexSet{0, 1, 2}}, {}};
  CHECK(cost(complete_graph(3), k3, kCard) == 3);
  CHECK(cost(gamma_family(2), chordal_clique_tree(gamma_family(2)), kAlpha) == 1);
  TreeDecomposition c4{{VertexSet{0, 1, 2, 3}}, {}};
  CHECK(cost(cycle_graph(4), c4, kAlpha) == 2);
  TreeDecomposition bad{{VertexSet{0}}, {}};
  CHECK_THROWS(cost(path_graph(2), bad, kCard));
}

TEST_CASE("path decomposition from a treedepth forest") {
  auto pd = path_decomp_from_treedepth(complete_graph(3), forest({-1, 0, 1}));
  CHECK(pd.bags == std::vector<VertexSet>{VertexSet{0, 1, 2}});
  pd = path_decomp_from_treedepth(path_graph(3), forest({1, -1, 1}));
  CHECK(pd.bags == std::vector<VertexSet>{VertexSet{0, 1}, VertexSet{1, 2}});
  auto s2 = gamma_family(2);
  auto f = td_decomp_from_vertex_cover(s2, vertex_cover_number(s2).witness);
  auto from_f = path_decomp_from_treedepth(s2, f);
  CHECK(validate_path_decomposition(s2, from_f).empty());
  CHECK(cost(s2, from_f, kCard) <= depth(f));
}

TEST_CASE("treedepth forest from a vertex cover") {
  auto f = td_decomp_from_vertex_cover(path_graph(3), VertexSet{1});
  CHECK(depth(f) == 2);
  CHECK(validate_treedepth_decomposition(path_graph(3), f).empty());
  f = td_decomp_from_vertex_cover(complete_graph(3), VertexSet{0, 1});
  CHECK(depth(f) == 3);
  CHECK(f.parent == std::vector<int>{-1, 0, 1});
  f = td_decomp_from_vertex_cover(cycle_graph(5), VertexSet{0, 2, 4});
  CHECK(depth(f) == 4);
  CHECK(validate_treedepth_decomposition(cycle_graph(5), f).empty());
  CHECK_THROWS(td_decomp_from_vertex_cover(path_graph(3), VertexSet{0}));
}

TEST_CASE("extensions") {
  TreeDecomposition k1{{VertexSet{0}}, {}};
  auto td = extend_tree_decomposition(complete_graph(2), VertexSet{1}, k1);
  CHECK(td.bags == std::vector<VertexSet>{VertexSet{0, 1}});

  PathDecomposition p3{{VertexSet{0, 1}, VertexSet{1, 2}}};
  auto c4 = cycle_graph(4);
  auto pd = extend_path_decomposition(c4, VertexSet{0}, p3);
  CHECK(validate_path_decomposition(c4, pd).empty());

  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      for (int v = 0; v < n; v += 2) {
        VertexSet s{v};
        auto rest = g.without(s);
        const int a = independence_number(g.induced(s));
        for (CostKind kind : kBothKinds) {
          const int grow = kind == kCard ? s.size() : a;
          auto tw = lambda_treewidth(rest, kind);
          auto ext_t = extend_tree_decomposition(g, s, tw.witness);
          CHECK(validate_tree_decomposition(g, ext_t).empty());
          CHECK(cost(g, ext_t, kind) <= tw.value + grow);
          auto pw = lambda_pathwidth(rest, kind);
          auto ext_p = extend_path_decomposition(g, s, pw.witness);
          CHECK(validate_path_decomposition(g, ext_p).empty());
          CHECK(cost(g, ext_p, kind) <= pw.value + grow);
          auto td_r = lambda_treedepth(rest, kind);
          auto ext_f = extend_treedepth_decomposition(g, s, td_r.witness);
          CHECK(validate_treedepth_decomposition(g, ext_f).empty());
          CHECK(cost(g, ext_f, kind) <= td_r.value + grow);
        }
      }
      for (CostKind kind : kBothKinds) {
        auto tw = lambda_treewidth(g, kind);
        CHECK(cost(g, extend_tree_decomposition(g, {}, tw.witness), kind) == tw.value);
      }
    }
  }
}

TEST_CASE("tree decomposition from a feedback vertex set") {
  auto c5 = cycle_graph(5);
  auto td = tree_decomp_from_fvs(c5, VertexSet{0});
  CHECK(validate_tree_decomposition(c5, td).empty());
  CHECK(cost(c5, td, kAlpha) <= 2);
  auto p5 = path_graph(5);
  CHECK(cost(p5, tree_decomp_from_fvs(p5, {}), kAlpha) == 1);
  auto k4 = complete_graph(4);
  CHECK(validate_tree_decomposition(k4, tree_decomp_from_fvs(k4, VertexSet{0, 1})).empty());
  CHECK_THROWS(tree_decomp_from_fvs(c5, {}));
}

TEST_CASE("chordal clique tree") {
  CHECK(cost(gamma_family(2), chordal_clique_tree(gamma_family(2)), kAlpha) == 1);
  CHECK(chordal_clique_tree(complete_graph(4)).bags == std::vector<VertexSet>{VertexSet{0, 1, 2, 3}});
  auto p4 = chordal_clique_tree(path_graph(4));
  CHECK(validate_tree_decomposition(path_graph(4), p4).empty());
  std::vector<VertexSet> want{VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{2, 3}};
  auto bags = p4.bags;
  std::sort(bags.begin(), bags.end(), lex_less);
  CHECK(bags == want);
  CHECK_THROWS(chordal_clique_tree(cycle_graph(4)));
}

TEST_CASE("transforms validate and cost never drops in the wrong direction") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      for (CostKind kind : kBothKinds) {
        auto td = lambda_treedepth(g, kind);
        auto pd = path_decomp_from_treedepth(g, td.witness);
        CHECK(validate_path_decomposition(g, pd).empty());
        CHECK(cost(g, pd, kind) <= cost(g, td.witness, kind));
        CHECK(cost(g, pd, kCard) >= cost(g, pd, kAlpha));
      }
      auto vc = vertex_cover_number(g);
      auto f = td_decomp_from_vertex_cover(g, vc.witness);
      CHECK(validate_treedepth_decomposition(g, f).empty());
      auto fvs = feedback_vertex_number(g);
      CHECK(validate_tree_decomposition(g, tree_decomp_from_fvs(g, fvs.witness)).empty());
      if (is_chordal(g)) CHECK(validate_tree_decomposition(g, chordal_clique_tree(g)).empty());
    }
  }
}

TEST_CASE("decomposition JSON round trip") {
  auto g = cycle_graph(6);
  auto tw = lambda_treewidth(g, kCard);
  nlohmann::json j = tw.witness;
  CHECK(j.contains("nodes"));
  CHECK(j.contains("bags"));
  auto back = j.get<TreeDecomposition>();
  CHECK(back.bags == tw.witness.bags);
  auto f = lambda_treedepth(g, kCard).witness;
  nlohmann::json jf = f;
  CHECK(jf.contains("parent"));
  CHECK(jf.get<RootedForest>().parent == f.parent);
  auto pd = lambda_pathwidth(g, kCard).witness;
  nlohmann::json jp = pd;
  CHECK(jp.get<PathDecomposition>().bags == pd.bags);
}
