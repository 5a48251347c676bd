#include "crossing/pst_ops.hpp"

#include <algorithm>
#include <sstream>

#include "crossing/graph6.hpp"

namespace crossing {
namespace {

void require_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw VertexNotFound(v);
}

}  // namespace

Graph clone_vertex(const Graph& g, Vertex v, int m) {
  require_vertex(g, v);
  if (m < 1) throw std::invalid_argument("clone count must be at least 1");
  const int n = g.order();
  std::vector<Edge> edges = g.edges();
  for (int copy = 1; copy < m; ++copy)
    for (Vertex w : g.neighbors(v)) edges.emplace_back(n + copy - 1, w);
  return Graph(n + m - 1, std::move(edges));
}

Graph split_vertex(const Graph& g, const SplitPlan& plan) {
  require_vertex(g, plan.v);
  const int n = g.order();
  const Vertex v = plan.v;
  if (plan.parts.empty()) throw InvalidPlan("split plan has no blocks");
  std::vector<int> owner(n, -1);
  int covered = 0;
  for (std::size_t i = 0; i < plan.parts.size(); ++i) {
    const auto& block = plan.parts[i];
    if (block.empty() && !(g.degree(v) == 0 && plan.parts.size() == 1)) throw InvalidPlan("empty block");
    for (Vertex w : block) {
      if (w < 0 || w >= n || !g.adjacent(v, w)) throw InvalidPlan("block vertex is not a neighbour of v");
      if (owner[w] >= 0) throw InvalidPlan("blocks overlap");
      owner[w] = static_cast<int>(i);
      ++covered;
    }
  }
  if (covered != g.degree(v)) throw InvalidPlan("blocks do not cover N(v)");
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) {
    if (e.u != v && e.v != v) {
      edges.push_back(e);
      continue;
    }
    const Vertex w = e.other(v);
    const int block = owner[w];
    edges.emplace_back(block == 0 ? v : n + block - 1, w);
  }
  return Graph(n + static_cast<int>(plan.parts.size()) - 1, std::move(edges));
}

Graph disjoint_union(std::span<const Graph> gs) {
  if (gs.empty()) throw std::invalid_argument("disjoint_union of an empty list");
  int offset = 0;
  std::vector<Edge> edges;
  for (const Graph& g : gs) {
    for (const Edge& e : g.edges()) edges.emplace_back(e.u + offset, e.v + offset);
    offset += g.order();
  }
  return Graph(offset, std::move(edges));
}

std::vector<int> greedy_cut(const Graph& g) {
  std::vector<int> side(g.order(), 0);
  for (bool moved = true; moved;) {
    moved = false;
    for (Vertex v = 0; v < g.order(); ++v) {
      int same = 0;
      for (Vertex w : g.neighbors(v)) same += side[w] == side[v];
      if (2 * same > g.degree(v)) {
        side[v] ^= 1;
        moved = true;
      }
    }
  }
  return side;
}

Graph bipartite_subgraph(const Graph& g) {
  const auto side = greedy_cut(g);
  std::vector<Edge> kept;
  for (const Edge& e : g.edges())
    if (side[e.u] != side[e.v]) kept.push_back(e);
  return Graph(g.order(), std::move(kept));
}

Graph merge_vertices(const Graph& g, std::span<const Vertex> group) {
  if (group.empty()) return g;
  for (Vertex v : group) require_vertex(g, v);
  const Vertex keep = *std::min_element(group.begin(), group.end());
  std::vector<char> merged(g.order(), 0);
  for (Vertex v : group) merged[v] = 1;
  std::vector<Vertex> label(g.order(), -1);
  int next = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!merged[v] || v == keep) label[v] = next++;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (merged[e.u] && merged[e.v]) throw std::invalid_argument("merged vertices must be non-adjacent");
    const Vertex a = merged[e.u] ? label[keep] : label[e.u];
    const Vertex b = merged[e.v] ? label[keep] : label[e.v];
    edges.emplace_back(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(next, std::move(edges));
}

Graph apply_operation(const Graph& g, const Operation& operation) {
  return std::visit(
      [&g](const auto& o) -> Graph {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, op::DeleteEdges>) {
          for (int i : o.indices)
            if (i < 0 || i >= g.size()) throw std::out_of_range("edge index out of range");
          return g.without_edges(o.indices);
        } else if constexpr (std::is_same_v<T, op::DeleteVertices>) {
          std::vector<char> drop(g.order(), 0);
          for (Vertex v : o.vertices) {
            require_vertex(g, v);
            drop[v] = 1;
          }
          std::vector<Vertex> keep;
          for (Vertex v = 0; v < g.order(); ++v)
            if (!drop[v]) keep.push_back(v);
          return g.induced(keep);
        } else if constexpr (std::is_same_v<T, op::Clone>) {
          return clone_vertex(g, o.v, o.copies);
        } else if constexpr (std::is_same_v<T, op::Split>) {
          return split_vertex(g, o.plan);
        } else {
          const Graph parts[] = {g, o.other};
          return disjoint_union(parts);
        }
      },
      operation);
}

std::string describe(const OperationTrace& trace) {
  std::ostringstream out;
  auto list = [&out](const std::vector<int>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  };
  for (std::size_t step = 0; step < trace.size(); ++step) {
    if (step) out << "; ";
    std::visit(
        [&](const auto& o) {
          using T = std::decay_t<decltype(o)>;
          if constexpr (std::is_same_v<T, op::DeleteEdges>) {
            out << "delete_edges(";
            list(o.indices);
            out << ")";
          } else if constexpr (std::is_same_v<T, op::DeleteVertices>) {
            out << "delete_vertices(";
            list(o.vertices);
            out << ")";
          } else if constexpr (std::is_same_v<T, op::Clone>) {
            out << "clone(" << o.v << "," << o.copies << ")";
          } else if constexpr (std::is_same_v<T, op::Split>) {
            out << "split(" << o.plan.v << ":";
            for (std::size_t i = 0; i < o.plan.parts.size(); ++i) {
              out << (i ? "|" : "");
              list(o.plan.parts[i]);
            }
            out << ")";
          } else {
            out << "union(" << to_graph6(o.other) << ")";
          }
        },
        trace[step]);
  }
  return out.str();
}

bool closure_check(const ClassSpec& spec, const Graph& g, const OperationTrace& trace) {
  if (!contains(spec, g)) throw PreconditionFailed("input graph is not in " + spec.to_string());
  Graph current = g;
  for (const Operation& operation : trace) {
    if (const auto* u = std::get_if<op::UnionWith>(&operation); u && !contains(spec, u->other))
      throw PreconditionFailed("union operand is not in " + spec.to_string());
    current = apply_operation(current, operation);
    if (!contains(spec, current)) return false;
  }
  return true;
}

}  // namespace crossing
