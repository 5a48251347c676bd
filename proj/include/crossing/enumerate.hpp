#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "crossing/class_spec.hpp"
#include "crossing/graph.hpp"

namespace crossing {

class CeilingExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Memoizing generator of isomorphism classes of class members.
///
/// Rows are built by edge augmentation: every member with e edges arises from
/// a member with e-1 edges (all supported classes are subgraph-closed), so
/// row e is the canonical deduplication of all one-edge extensions of row e-1.
/// For the All class, rows above half density are complements of sparse rows.
/// Output order is ascending canonical code; graphs are returned in canonical
/// labelling. Thread-safe.
class GraphCatalog {
 public:
  explicit GraphCatalog(EnumerationLimits limits = {}) : limits_(limits) {}

  const EnumerationLimits& limits() const { return limits_; }

  /// Every isomorphism class in `spec` with exactly n vertices and e edges.
  /// Throws CeilingExceeded when n is above the class's ceiling.
  const std::vector<Graph>& graphs(const ClassSpec& spec, int n, int e);

 private:
  using Key = std::pair<std::string, int>;
  struct Rows {
    std::vector<std::vector<Graph>> by_edges;
    std::vector<char> built;
  };

  const std::vector<Graph>& build_row(const ClassSpec& spec, Rows& rows, int n, int e);

  EnumerationLimits limits_;
  std::mutex mutex_;
  std::map<Key, Rows> cache_;
};

/// Convenience wrapper with a fresh catalog.
std::vector<Graph> enumerate_graphs(const ClassSpec& spec, int n, int e, const EnumerationLimits& limits = {});

/// Streams the same sequence to `sink`.
void for_each_graph(const ClassSpec& spec, int n, int e, const std::function<void(const Graph&)>& sink,
                    const EnumerationLimits& limits = {});

/// Largest e with a nonempty row; uses enumeration, so subject to ceilings.
int exhaustive_max_edges(const ClassSpec& spec, int n, const EnumerationLimits& limits = {});

}  // namespace crossing
