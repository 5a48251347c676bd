#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "crossing/graph.hpp"
#include "crossing/planarity.hpp"

namespace crossing {

/// Unordered pair of edge indices, stored with first < second.
using CrossingPair = std::pair<int, int>;

/// A drawing of `base` up to isotopy: which edge pairs cross and in what order
/// the crossings appear along each edge, plus the planarization (crossing i
/// becomes dummy vertex n + i) with an embedding of it.
struct DrawingCertificate {
  Graph base;
  std::vector<CrossingPair> crossings;
  /// edge_orders[e] lists crossing indices met walking edge e from its lower
  /// endpoint to its higher endpoint.
  std::vector<std::vector<int>> edge_orders;
  Graph skeleton;
  RotationSystem skeleton_rotation;

  int crossing_count() const { return static_cast<int>(crossings.size()); }
};

/// Planarization of base under the given crossings and orders. Does not
/// validate its input; see verify_certificate.
Graph planarize(const Graph& base, const std::vector<CrossingPair>& crossings,
                const std::vector<std::vector<int>>& edge_orders);

/// Builds the full certificate, or nullopt when the planarization is not
/// planar. Input must satisfy the structural invariants.
std::optional<DrawingCertificate> make_certificate(Graph base, std::vector<CrossingPair> crossings,
                                                   std::vector<std::vector<int>> edge_orders);

/// Certificate of a planar graph (no crossings); nullopt if g is not planar.
std::optional<DrawingCertificate> planar_certificate(const Graph& g);

/// Renumbers crossings so that the list is sorted, remapping edge orders.
void sort_crossings(DrawingCertificate& c);

/// Checks every invariant from scratch: indices in range, crossing edges have
/// four distinct endpoints, no repeated pair, edge orders list exactly the
/// crossings of each edge, the skeleton equals the planarization, it passes
/// the planarity test and the stored rotation is a planar embedding of it.
bool verify_certificate(const DrawingCertificate& c);

}  // namespace crossing
