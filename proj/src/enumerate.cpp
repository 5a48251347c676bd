#include "crossing/enumerate.hpp"

#include <algorithm>
#include <set>

#include "crossing/canonical.hpp"

namespace crossing {
namespace {

std::vector<Graph> extend_row(const ClassSpec& spec, const std::vector<Graph>& previous) {
  std::map<CanonicalForm, Graph> found;
  for (const Graph& g : previous) {
    const int n = g.order();
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (g.adjacent(u, v)) continue;
        Graph candidate = g.with_edge(u, v);
        const CanonicalLabeling labeling = canonical_labeling(candidate);
        if (found.contains(labeling.form)) continue;
        if (!contains(spec, candidate)) continue;
        found.emplace(labeling.form, candidate.relabeled(labeling.position));
      }
    }
  }
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& [form, graph] : found) out.push_back(std::move(graph));
  return out;
}

}  // namespace

const std::vector<Graph>& GraphCatalog::graphs(const ClassSpec& spec, int n, int e) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  const int ceiling = std::min(limits_.ceiling_for(spec), EnumerationLimits::kMaxSupported);
  if (n > ceiling) {
    throw CeilingExceeded("n=" + std::to_string(n) + " exceeds the enumeration ceiling " + std::to_string(ceiling) +
                          " for " + spec.to_string());
  }
  std::lock_guard lock(mutex_);
  Rows& rows = cache_[{spec.to_string(), n}];
  return build_row(spec, rows, n, e);
}

const std::vector<Graph>& GraphCatalog::build_row(const ClassSpec& spec, Rows& rows, int n, int e) {
  static const std::vector<Graph> kNone;
  const int total = n * (n - 1) / 2;
  if (e < 0 || e > total) return kNone;
  if (rows.by_edges.empty()) {
    rows.by_edges.resize(total + 1);
    rows.built.assign(total + 1, 0);
  }
  auto& slot = rows.by_edges[e];
  if (rows.built[e]) return slot;
  rows.built[e] = 1;

  if (spec.kind() == ClassSpec::Kind::All && 2 * e > total) {
    const auto& sparse = build_row(spec, rows, n, total - e);
    std::map<CanonicalForm, Graph> found;
    for (const Graph& g : sparse) {
      Graph dense = g.complement();
      const auto labeling = canonical_labeling(dense);
      found.emplace(labeling.form, dense.relabeled(labeling.position));
    }
    for (auto& [form, graph] : found) slot.push_back(std::move(graph));
    return slot;
  }
  if (e == 0) {
    slot.push_back(Graph(n));
    return slot;
  }
  const auto& previous = build_row(spec, rows, n, e - 1);
  slot = extend_row(spec, previous);
  return slot;
}

std::vector<Graph> enumerate_graphs(const ClassSpec& spec, int n, int e, const EnumerationLimits& limits) {
  GraphCatalog catalog(limits);
  return catalog.graphs(spec, n, e);
}

void for_each_graph(const ClassSpec& spec, int n, int e, const std::function<void(const Graph&)>& sink,
                    const EnumerationLimits& limits) {
  for (const Graph& g : enumerate_graphs(spec, n, e, limits)) sink(g);
}

int exhaustive_max_edges(const ClassSpec& spec, int n, const EnumerationLimits& limits) {
  GraphCatalog catalog(limits);
  int best = 0;
  const int total = n * (n - 1) / 2;
  for (int e = 1; e <= total; ++e) {
    if (catalog.graphs(spec, n, e).empty()) break;
    best = e;
  }
  return best;
}

}  // namespace crossing
