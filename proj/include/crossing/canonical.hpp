#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "crossing/graph.hpp"

namespace crossing {

/// Minimum upper-triangle adjacency bit string over all relabelings that
/// respect the (isomorphism-invariant) colour-refinement order. Pairs are
/// read column-wise, (0,1),(0,2),(1,2),(0,3),..., first pair most significant.
struct CanonicalForm {
  int n = 0;
  std::uint64_t code = 0;

  auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// position[v] = canonical index of vertex v.
  std::vector<Vertex> position;
};

/// Requires g.order() <= 11 (55 code bits).
CanonicalLabeling canonical_labeling(const Graph& g);
inline CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }
/// Graph with vertices renamed to canonical positions.
Graph canonical_graph(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

/// Stable colour refinement (1-dimensional Weisfeiler-Leman) starting from
/// degrees; colours are dense ranks of isomorphism-invariant signatures.
std::vector<int> refined_colors(const Graph& g);

/// All automorphisms as vertex maps, stopping after `limit` of them.
/// Works for any n, but is only meant for small graphs.
std::vector<std::vector<Vertex>> automorphisms(const Graph& g, std::size_t limit = 1'000'000);

}  // namespace crossing
