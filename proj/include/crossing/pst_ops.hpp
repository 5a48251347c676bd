#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "crossing/class_spec.hpp"
#include "crossing/graph.hpp"

namespace crossing {

class VertexNotFound : public std::out_of_range {
 public:
  explicit VertexNotFound(Vertex v) : std::out_of_range("vertex " + std::to_string(v) + " not in graph"), vertex(v) {}
  Vertex vertex;
};

class InvalidPlan : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PreconditionFailed : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Partition of N(v). Block 0 stays on v, block i > 0 moves to the i-th
/// appended vertex.
struct SplitPlan {
  Vertex v = 0;
  std::vector<std::vector<Vertex>> parts;
};

/// Replaces v by m pairwise non-adjacent copies with neighbourhood N(v).
/// v keeps its index; the other m - 1 copies are appended as n, n+1, ...
Graph clone_vertex(const Graph& g, Vertex v, int m);

/// Throws InvalidPlan unless the blocks are non-empty and partition N(v).
/// An isolated vertex accepts the single empty block (identity).
Graph split_vertex(const Graph& g, const SplitPlan& plan);

/// Graphs placed side by side, vertex ranges in list order.
Graph disjoint_union(std::span<const Graph> gs);

/// Greedy local-switching max cut: start with all vertices on side 0, move
/// any vertex with more neighbours on its own side, until stable.
std::vector<int> greedy_cut(const Graph& g);
/// Spanning subgraph of the cut edges of greedy_cut; has >= ceil(e/2) edges.
Graph bipartite_subgraph(const Graph& g);

/// Contracts `group` (pairwise non-adjacent) into its smallest member; the
/// other members are removed and the remaining vertices renumbered in order.
Graph merge_vertices(const Graph& g, std::span<const Vertex> group);

namespace op {
struct DeleteEdges {
  std::vector<int> indices;
};
struct DeleteVertices {
  std::vector<Vertex> vertices;
};
struct Clone {
  Vertex v = 0;
  int copies = 1;
};
struct Split {
  SplitPlan plan;
};
struct UnionWith {
  Graph other;
};
}  // namespace op

using Operation = std::variant<op::DeleteEdges, op::DeleteVertices, op::Clone, op::Split, op::UnionWith>;
using OperationTrace = std::vector<Operation>;

Graph apply_operation(const Graph& g, const Operation& operation);
std::string describe(const OperationTrace& trace);

/// Applies the trace step by step and reports whether every intermediate
/// graph is still in the class. Throws PreconditionFailed when g (or a
/// union operand) is not in the class.
bool closure_check(const ClassSpec& spec, const Graph& g, const OperationTrace& trace);

}  // namespace crossing
