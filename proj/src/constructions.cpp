#include "alphawidth/constructions.hpp"

#include <string>

namespace alphawidth {

SubstitutionKind parse_substitution_kind(std::string_view name) {
  if (name == "s-claw" || name == "sclaw") return SubstitutionKind::SClaw;
  if (name == "p5") return SubstitutionKind::P5;
  if (name == "net") return SubstitutionKind::Net;
  throw std::invalid_argument("unknown substitution '" + std::string(name) + "'");
}

std::string_view to_string(SubstitutionKind kind) {
  switch (kind) {
    case SubstitutionKind::SClaw: return "s-claw";
    case SubstitutionKind::P5: return "p5";
    case SubstitutionKind::Net: return "net";
  }
  return "?";
}

Graph substitute(const Graph& g, SubstitutionKind kind) {
  const int n = g.order();
  const int copies = kind == SubstitutionKind::P5 ? 2 : 3;
  const int extra = kind == SubstitutionKind::Net ? 3 : copies + 1;
  Graph out(copies * n + extra);
  const int hub = copies * n;
  for (int c = 0; c < copies; ++c) {
    for (auto [u, v] : g.edges()) out.add_edge(c * n + u, c * n + v);
    for (int u = 0; u < n; ++u) out.add_edge(hub + c, c * n + u);
  }
  if (kind == SubstitutionKind::Net) {
    out.add_edge(hub, hub + 1);
    out.add_edge(hub, hub + 2);
    out.add_edge(hub + 1, hub + 2);
  } else {
    const int w = hub + copies;
    for (int c = 0; c < copies; ++c) out.add_edge(hub + c, w);
  }
  return out;
}

Graph gamma_family(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("gamma_family index must be in 1..5");
  Graph g(1);
  for (int i = 2; i <= n; ++i) g = substitute(g, SubstitutionKind::SClaw);
  return g;
}

Graph subdivided_claw() {
  Graph g(7);
  for (int i = 1; i <= 3; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, i + 3);
  }
  return g;
}

}  // namespace alphawidth
