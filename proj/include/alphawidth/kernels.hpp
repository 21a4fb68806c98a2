#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "alphawidth/base_params.hpp"
#include "alphawidth/decomposition.hpp"
#include "alphawidth/graph.hpp"

namespace alphawidth {

inline constexpr int kMaxTableOrder = 26;

/// α(G[X]) for every X ⊆ V(G), indexed by bitmask. Requires n <= 26.
class SubsetAlphaTable {
 public:
  /// Reference implementation, one pass in mask order.
  static SubsetAlphaTable build_serial(const Graph& g);
  /// Same table; the masks of each block [2^k, 2^(k+1)) only read masks below
  /// 2^k, so each block is filled by an OpenMP loop. threads <= 0 keeps the
  /// runtime default.
  static SubsetAlphaTable build_parallel(const Graph& g, int threads = 0);

  int order() const { return n_; }
  int operator[](std::uint32_t mask) const { return values_[mask]; }
  const std::vector<std::uint8_t>& values() const { return values_; }

 private:
  int n_ = 0;
  std::vector<std::uint8_t> values_;
};

/// λ(G, X) on bitmask subsets of a host graph with at most 64 vertices. Uses a
/// SubsetAlphaTable when the host is small enough, otherwise a branch and
/// bound oracle.
class MaskCost {
 public:
  MaskCost(const Graph& g, CostKind kind);

  int operator()(std::uint64_t mask) const;
  CostKind kind() const { return kind_; }

 private:
  CostKind kind_;
  std::optional<SubsetAlphaTable> table_;
  std::optional<IndependenceOracle> oracle_;
};

}  // namespace alphawidth
