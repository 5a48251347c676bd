#include "crossing/certificate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace crossing {

Graph planarize(const Graph& base, const std::vector<CrossingPair>& crossings,
                const std::vector<std::vector<int>>& edge_orders) {
  const int n = base.order();
  std::vector<Edge> edges;
  edges.reserve(base.size() + 2 * crossings.size());
  for (int i = 0; i < base.size(); ++i) {
    Vertex at = base.edge(i).u;
    for (int c : edge_orders[i]) {
      edges.emplace_back(at, n + c);
      at = n + c;
    }
    edges.emplace_back(at, base.edge(i).v);
  }
  return Graph(n + static_cast<int>(crossings.size()), std::move(edges));
}

std::optional<DrawingCertificate> make_certificate(Graph base, std::vector<CrossingPair> crossings,
                                                   std::vector<std::vector<int>> edge_orders) {
  DrawingCertificate c;
  c.skeleton = planarize(base, crossings, edge_orders);
  auto verdict = is_planar(c.skeleton);
  if (!verdict.planar) return std::nullopt;
  c.base = std::move(base);
  c.crossings = std::move(crossings);
  c.edge_orders = std::move(edge_orders);
  c.skeleton_rotation = std::move(*verdict.certificate);
  return c;
}

std::optional<DrawingCertificate> planar_certificate(const Graph& g) {
  return make_certificate(g, {}, std::vector<std::vector<int>>(g.size()));
}

void sort_crossings(DrawingCertificate& c) {
  const int k = c.crossing_count();
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return c.crossings[a] < c.crossings[b]; });
  std::vector<int> rank(k);
  for (int i = 0; i < k; ++i) rank[order[i]] = i;
  bool identity = true;
  for (int i = 0; i < k; ++i) identity = identity && rank[i] == i;
  if (identity) return;
  std::vector<CrossingPair> sorted(k);
  for (int i = 0; i < k; ++i) sorted[rank[i]] = c.crossings[i];
  c.crossings = std::move(sorted);
  for (auto& list : c.edge_orders)
    for (int& x : list) x = rank[x];
  // Dummy vertices are renumbered with the crossings.
  const int n = c.base.order();
  std::vector<Vertex> perm(n + k);
  for (int v = 0; v < n; ++v) perm[v] = v;
  for (int i = 0; i < k; ++i) perm[n + i] = n + rank[i];
  c.skeleton = c.skeleton.relabeled(perm);
  RotationSystem moved;
  moved.around.resize(n + k);
  for (int v = 0; v < n + k; ++v) {
    auto& list = moved.around[perm[v]];
    for (Vertex w : c.skeleton_rotation.around[v]) list.push_back(perm[w]);
  }
  c.skeleton_rotation = std::move(moved);
}

bool verify_certificate(const DrawingCertificate& c) {
  const int m = c.base.size();
  const int k = c.crossing_count();
  if (static_cast<int>(c.edge_orders.size()) != m) return false;
  std::set<CrossingPair> seen;
  for (const auto& [a, b] : c.crossings) {
    if (a < 0 || b >= m || a >= b) return false;
    if (c.base.edge(a).shares_endpoint(c.base.edge(b))) return false;
    if (!seen.insert({a, b}).second) return false;
  }
  // Each crossing must appear exactly once on each of its two edges.
  std::vector<std::vector<int>> expected(m);
  for (int i = 0; i < k; ++i) {
    expected[c.crossings[i].first].push_back(i);
    expected[c.crossings[i].second].push_back(i);
  }
  for (int e = 0; e < m; ++e) {
    std::vector<int> listed = c.edge_orders[e];
    std::sort(listed.begin(), listed.end());
    if (listed != expected[e]) return false;
  }
  Graph skeleton;
  try {
    skeleton = planarize(c.base, c.crossings, c.edge_orders);
  } catch (const std::invalid_argument&) {
    return false;
  }
  if (!(skeleton == c.skeleton)) return false;
  if (!is_planar(skeleton).planar) return false;
  return is_planar_embedding(skeleton, c.skeleton_rotation);
}

}  // namespace crossing
