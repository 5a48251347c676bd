#pragma once

#include <optional>
#include <span>
#include <vector>

#include "crossing/graph.hpp"

namespace crossing {

/// Combinatorial embedding: for every vertex, the cyclic order of its
/// neighbours (all in the same rotational sense).
struct RotationSystem {
  std::vector<std::vector<Vertex>> around;

  bool operator==(const RotationSystem&) const = default;
};

struct PlanarityVerdict {
  bool planar = false;
  /// Present iff planar.
  std::optional<RotationSystem> certificate;
};

/// Left-right planarity test (de Fraysseix-Rosenstiehl criterion in
/// Brandes' formulation), linear time, with optional embedding phase.
///
/// Buffers are reused across calls, so a tester instance is cheap to call in
/// an inner loop but must not be shared between threads.
class PlanarityTester {
 public:
  bool test(int n, std::span<const Edge> edges);
  bool test(const Graph& g) { return test(g.order(), g.edges()); }
  PlanarityVerdict embed(int n, std::span<const Edge> edges);
  PlanarityVerdict embed(const Graph& g) { return embed(g.order(), g.edges()); }

 private:
  struct Interval {
    int low = -1;
    int high = -1;
    bool empty() const { return low < 0 && high < 0; }
  };
  struct ConflictPair {
    Interval left;
    Interval right;
  };

  bool run(int n, std::span<const Edge> edges, bool want_embedding);
  void orient(int v);
  bool test_vertex(int v);
  bool add_constraints(int ei, int e);
  void remove_back_edges(int e);
  int sign(int e);
  bool conflicting(const Interval& interval, int b) const {
    return !interval.empty() && lowpt_[interval.high] > lowpt_[b];
  }
  int lowest(const ConflictPair& p) const;
  void sort_out_edges(int v);
  void build_embedding(int n);
  void embed_vertex(int v);
  void add_half_edge_cw(int v, int h, int reference);
  void add_half_edge_ccw(int v, int h, int reference);
  int half_at(int edge, int v) const { return 2 * edge + (v == tail_[edge] ? 0 : 1); }

  // Undirected input in CSR form.
  std::vector<int> adj_start_, adj_vertex_, adj_edge_, fill_;
  // Orientation and testing state, indexed by vertex or edge id.
  std::vector<int> height_, parent_edge_;
  std::vector<int> tail_, head_;
  std::vector<int> lowpt_, lowpt2_, nesting_depth_;
  // Outgoing edges of v occupy out_edges_[adj_start_[v] ..][0 .. out_count_[v]).
  std::vector<int> out_edges_, out_count_;
  std::vector<int> ref_, side_, lowpt_edge_, stack_bottom_;
  std::vector<ConflictPair> stack_;
  std::vector<int> roots_;
  // Embedding state over half-edges (2*edge + end).
  std::vector<int> cw_, ccw_, first_half_, left_ref_, right_ref_;
  RotationSystem rotation_;
};

/// One-shot convenience wrapper.
PlanarityVerdict is_planar(const Graph& g);

/// Number of face orbits of the rotation system (one outer face per
/// component with edges). Assumes `rotation` lists exactly g's neighbours.
int count_faces(const Graph& g, const RotationSystem& rotation);

/// True iff `rotation` is a rotation system of g (each vertex's list is a
/// permutation of its neighbours) and every component with edges satisfies
/// n_i - e_i + f_i = 2.
bool is_planar_embedding(const Graph& g, const RotationSystem& rotation);

}  // namespace crossing
