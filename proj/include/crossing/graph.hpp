#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace crossing {

using Vertex = int;

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool shares_endpoint(const Edge& other) const {
    return u == other.u || u == other.v || v == other.u || v == other.v;
  }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are kept sorted lexicographically; an edge's position in that order
/// is its index, which certificates and crossing pairs refer to. Values are
/// immutable after construction, so a Graph can be shared between threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws std::invalid_argument on self-loops, parallel edges or
  /// out-of-range endpoints.
  Graph(int n, std::vector<Edge> edges);

  static Graph empty(int n) { return Graph(n); }
  static Graph complete(int n);
  static Graph complete_bipartite(int a, int b);
  static Graph cycle(int n);
  static Graph path(int n);
  static Graph star(int leaves) { return complete_bipartite(1, leaves); }
  static Graph petersen();

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[index]; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  std::vector<int> degrees() const;
  int max_degree() const;

  bool adjacent(Vertex a, Vertex b) const;
  /// Index of edge {a,b} in edges(), if present.
  std::optional<int> edge_index(Vertex a, Vertex b) const;

  Graph with_edge(Vertex a, Vertex b) const;
  Graph without_edge(int index) const;
  Graph without_edges(std::span<const int> indices) const;
  /// Subgraph induced by `keep`, relabelled to 0..|keep|-1 in the given order.
  Graph induced(std::span<const Vertex> keep) const;
  /// Image under the vertex map v -> perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;
  Graph complement() const;

  /// Connected components as vertex lists (each sorted, ordered by minimum).
  std::vector<std::vector<Vertex>> components() const;
  /// Length of a shortest cycle, or nullopt for forests.
  std::optional<int> girth() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

  std::string to_string() const;

 private:
  void build_adjacency();

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

}  // namespace crossing
