#include "alphawidth/kernels.hpp"

#include <algorithm>
#include <bit>

#include <omp.h>

namespace alphawidth {

namespace {

void check_table_order(const Graph& g) {
  if (g.order() > kMaxTableOrder) {
    throw BudgetExceeded("subset alpha table supports at most " + std::to_string(kMaxTableOrder) + " vertices");
  }
}

// Closed neighborhoods as complement masks: keep[v] = V - N[v].
std::vector<std::uint32_t> keep_masks(const Graph& g) {
  const std::uint32_t all = g.order() == 32 ? ~0U : (1U << g.order()) - 1U;
  std::vector<std::uint32_t> keep(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    keep[v] = all & ~static_cast<std::uint32_t>(g.mask(v)) & ~(1U << v);
  }
  return keep;
}

inline std::uint8_t step(const std::vector<std::uint8_t>& a, const std::vector<std::uint32_t>& keep,
                         std::uint32_t x) {
  const int v = 31 - std::countl_zero(x);
  const std::uint32_t rest = x & ~(1U << v);
  return std::max<std::uint8_t>(a[rest], static_cast<std::uint8_t>(1 + a[rest & keep[v]]));
}

}  // namespace

SubsetAlphaTable SubsetAlphaTable::build_serial(const Graph& g) {
  check_table_order(g);
  SubsetAlphaTable t;
  t.n_ = g.order();
  t.values_.assign(std::size_t{1} << t.n_, 0);
  auto keep = keep_masks(g);
  for (std::uint32_t x = 1; x < (1U << t.n_); ++x) t.values_[x] = step(t.values_, keep, x);
  return t;
}

SubsetAlphaTable SubsetAlphaTable::build_parallel(const Graph& g, int threads) {
  check_table_order(g);
  SubsetAlphaTable t;
  t.n_ = g.order();
  t.values_.assign(std::size_t{1} << t.n_, 0);
  auto keep = keep_masks(g);
  if (threads <= 0) threads = omp_get_max_threads();
  std::uint8_t* a = t.values_.data();
  for (int k = 0; k < t.n_; ++k) {
    // Top vertex is k throughout the block, so rest = x - lo.
    const std::int64_t lo = std::int64_t{1} << k;
    const std::uint32_t kv = keep[k];
    std::uint8_t* out = a + lo;
#pragma omp parallel for schedule(static) num_threads(threads) if (k >= 12)
    for (std::int64_t r = 0; r < lo; ++r) {
      const std::uint8_t skip = a[r];
      const std::uint8_t take = static_cast<std::uint8_t>(1 + a[static_cast<std::uint32_t>(r) & kv]);
      out[r] = skip > take ? skip : take;
    }
  }
  return t;
}

MaskCost::MaskCost(const Graph& g, CostKind kind) : kind_(kind) {
  if (g.order() > 64) throw BudgetExceeded("mask cost supports at most 64 vertices");
  if (kind == CostKind::Cardinality) return;
  if (g.order() <= kMaxTableOrder) {
    table_ = SubsetAlphaTable::build_parallel(g);
  } else {
    oracle_.emplace(g);
  }
}

int MaskCost::operator()(std::uint64_t mask) const {
  if (kind_ == CostKind::Cardinality) return std::popcount(mask);
  if (table_) return (*table_)[static_cast<std::uint32_t>(mask)];
  return oracle_->alpha(VertexSet::from_mask(mask));
}

}  // namespace alphawidth
