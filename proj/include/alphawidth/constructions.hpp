#pragma once

#include <string_view>

#include "alphawidth/graph.hpp"

namespace alphawidth {

enum class SubstitutionKind {
  /// Three copies hung below the leaves of the subdivided claw.
  SClaw,
  /// Two copies at the ends of a P5 pattern.
  P5,
  /// Three copies replacing the pendants of the net.
  Net,
};

SubstitutionKind parse_substitution_kind(std::string_view name);
std::string_view to_string(SubstitutionKind kind);

/// Vertex layout: the copies of g first (copy i on ids i*n..i*n+n-1), then
/// the new vertices in ascending order.
///   s-claw: v1,v2,v3 (vi complete to copy i), then w adjacent to v1,v2,v3;
///           3n+4 vertices.
///   p5:     v1,v2 (vi complete to copy i), then the middle vertex adjacent
///           to v1,v2; 2n+3 vertices.
///   net:    x1,x2,x3 forming a triangle, xi complete to copy i; 3n+3
///           vertices.
Graph substitute(const Graph& g, SubstitutionKind kind);

/// S_1 = K_1, S_n = s-claw substitution of S_{n-1}. Accepts 1 <= n <= 5.
Graph gamma_family(int n);

/// The claw with each edge subdivided once: center 0, middles 1..3,
/// leaves 4..6 (leaf 3+i hangs off middle i).
Graph subdivided_claw();

}  // namespace alphawidth
