#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "crossing/certificate.hpp"
#include "crossing/graph.hpp"

namespace crossing {

/// max of 0, e - 3n + 6 (n >= 3), ceil(e^3 / 64n^2) for e > 4n and
/// ceil(e^3 / 29n^2) for e > 7n.
int crossing_number_lower_bound(int n, int e);
inline int crossing_number_lower_bound(const Graph& g) { return crossing_number_lower_bound(g.order(), g.size()); }

/// Girth-refined Euler bound: a planar graph of girth g has at most
/// g(n-2)/(g-2) edges, so at least e - floor(g(n-2)/(g-2)) edges must be
/// removed, one per crossing. Returns 0 for forests and n < 3.
int girth_lower_bound(const Graph& g);

struct SolverOptions {
  /// Search nodes (planarity tests) allowed in total; nullopt = unlimited.
  std::optional<std::int64_t> node_budget;
  /// Stop with AboveLimit as soon as Cr(G) > max_crossings is established.
  std::optional<int> max_crossings;
  /// OpenMP threads for the frontier; 0 = omp_get_max_threads().
  int workers = 0;
  bool use_heuristic = true;
  bool use_girth_bound = true;
  /// Cr(G) >= sum over v of Cr(G - v), divided by n - 4 (subproblems solved
  /// recursively, sharing the node budget).
  bool use_vertex_bound = true;
  bool use_symmetry = true;
};

struct SolveResult {
  enum class Status { Exact, AboveLimit, BudgetExceeded };
  Status status = Status::Exact;
  /// Proven Cr(G) >= lower; for Exact lower == upper == Cr(G).
  int lower = 0;
  /// Cr(G) <= upper, witnessed by certificate when present.
  int upper = 0;
  std::optional<DrawingCertificate> certificate;
  std::int64_t nodes = 0;
};

/// Exact crossing number by iterative deepening over partial planarizations.
///
/// A search node is a set of crossing edge pairs with fixed orders along
/// their edges. When its planarization is not planar, an edge-minimal
/// nonplanar subgraph is extracted; some two of its segments, belonging to
/// independent edges that do not cross yet, must cross in every drawing
/// extending the node. The node branches on which such edge pair crosses
/// first (earlier candidates are excluded in later branches) and at which
/// segments. The first depth with a planar node is Cr(G).
///
/// The result (including the certificate) does not depend on `workers`.
SolveResult solve(const Graph& g, const SolverOptions& options = {});

/// The same search as a single recursive depth-first traversal, without
/// frontier splitting or OpenMP. Kept as the reference for solve().
SolveResult solve_serial(const Graph& g, const SolverOptions& options = {});

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(int lower, int upper, std::optional<DrawingCertificate> best)
      : std::runtime_error("crossing number search exceeded its node budget (bounds " + std::to_string(lower) +
                           ".." + std::to_string(upper) + ")"),
        lower_bound(lower),
        upper_bound(upper),
        best_certificate(std::move(best)) {}

  int lower_bound;
  int upper_bound;
  std::optional<DrawingCertificate> best_certificate;
};

struct CrossingNumber {
  int value = 0;
  DrawingCertificate certificate;
};

/// Exact Cr(G) with a witness; throws BudgetExceeded when the node budget
/// runs out first.
CrossingNumber crossing_number(const Graph& g, std::optional<std::int64_t> budget = std::nullopt);

/// Unpruned exhaustive search: for k = 0, 1, ... every k-set of independent
/// edge pairs and every crossing order along every edge is planarized and
/// tested. Independent of solve(); only usable on small instances.
/// Returns nullopt if no drawing with at most max_k crossings exists.
std::optional<CrossingNumber> exhaustive_crossing_number(const Graph& g, int max_k);

}  // namespace crossing
