#include <doctest.h>

#include "alphawidth/generators.hpp"
#include "alphawidth/kernels.hpp"
#include "alphawidth/modulators.hpp"
#include "alphawidth/mwis.hpp"
#include "oracles.hpp"

using namespace alphawidth;

TEST_CASE("subset alpha table matches brute force") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto g = random_graph(10, 0.4, seed);
    auto adj = oracle::adjacency(g);
    auto t = SubsetAlphaTable::build_serial(g);
    for (std::uint32_t m = 0; m < (1u << 10); ++m) CHECK(t[m] == oracle::alpha(adj, m));
  }
}

TEST_CASE("parallel alpha table equals the serial one") {
  for (int threads : {1, 2, 4}) {
    auto g = random_graph(18, 0.3, 42);
    CHECK(SubsetAlphaTable::build_parallel(g, threads).values() == SubsetAlphaTable::build_serial(g).values());
  }
  CHECK_THROWS_AS(SubsetAlphaTable::build_serial(empty_graph(27)), BudgetExceeded);
}

TEST_CASE("mask cost") {
  auto g = cycle_graph(5);
  MaskCost card(g, CostKind::Cardinality);
  MaskCost ind(g, CostKind::Independence);
  CHECK(card(0b11111) == 5);
  CHECK(ind(0b11111) == 2);
  CHECK(ind(0b00011) == 1);
  auto big = random_graph(40, 0.2, 3);
  MaskCost big_ind(big, CostKind::Independence);
  CHECK(big_ind((std::uint64_t{1} << 40) - 1) == independence_number(big));
}

TEST_CASE("parallel ramsey check equals the serial one") {
  for (int n = 1; n <= 6; ++n)
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; b <= 4; ++b) CHECK(ramsey_property_check_parallel(n, a, b, 2) == ramsey_property_check(n, a, b));
}

TEST_CASE("parallel mwis through an oct equals the serial one") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto g = random_graph(14, 0.4, seed);
    std::vector<std::int64_t> w(14);
    for (int v = 0; v < 14; ++v) w[v] = static_cast<std::int64_t>((seed * 31 + v * 17) % 101);
    WeightedGraph wg(g, w);
    auto oct = find_oct_with_bounded_alpha(g, 14);
    REQUIRE(oct);
    const int k = independence_number(g.induced(*oct));
    auto a = mwis_via_oct(wg, k);
    auto b = mwis_via_oct_parallel(wg, k, 3);
    CHECK(a.weight == b.weight);
    CHECK(a.set == b.set);
  }
}
