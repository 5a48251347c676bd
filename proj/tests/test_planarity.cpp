#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <bit>

#include "crossing/canonical.hpp"
#include "crossing/class_spec.hpp"
#include "crossing/enumerate.hpp"
#include "crossing/planarity.hpp"

using namespace crossing;

namespace {

// Exhaustive search over rotation systems: planar iff some rotation system
// satisfies Euler's formula on every component.
bool planar_by_rotations(const Graph& g) {
  const int n = g.order();
  RotationSystem rotation;
  rotation.around.resize(n);
  for (int v = 0; v < n; ++v) rotation.around[v] = g.neighbors(v);
  std::function<bool(int)> choose = [&](int v) -> bool {
    if (v == n) return is_planar_embedding(g, rotation);
    auto& list = rotation.around[v];
    if (list.size() <= 2) return choose(v + 1);
    // Fix the first neighbour; permute the rest.
    std::sort(list.begin() + 1, list.end());
    do {
      if (choose(v + 1)) return true;
    } while (std::next_permutation(list.begin() + 1, list.end()));
    return false;
  };
  return choose(0);
}

bool has_k33_subgraph(const Graph& g) {
  const int n = g.order();
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (std::popcount(static_cast<unsigned>(mask)) != 6) continue;
    std::vector<int> pick;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) pick.push_back(v);
    for (int side = 0; side < 64; ++side) {
      if (std::popcount(static_cast<unsigned>(side)) != 3 || !(side & 1)) continue;
      bool ok = true;
      for (int i = 0; i < 6 && ok; ++i)
        for (int j = 0; j < 6 && ok; ++j)
          if ((side >> i & 1) && !(side >> j & 1)) ok = g.adjacent(pick[i], pick[j]);
      if (ok) return true;
    }
  }
  return false;
}

Graph contract(const Graph& g, const Edge& e) {
  std::vector<int> map(g.order());
  for (int v = 0, next = 0; v < g.order(); ++v) map[v] = v == e.v ? -1 : next++;
  map[e.v] = map[e.u];
  std::set<Edge> edges;
  for (const Edge& f : g.edges()) {
    const int a = map[f.u], b = map[f.v];
    if (a != b) edges.insert(Edge(a, b));
  }
  return Graph(g.order() - 1, {edges.begin(), edges.end()});
}

// Wagner: nonplanar iff a K5 or K3,3 minor exists. Memoized on canonical forms.
class MinorOracle {
 public:
  bool nonplanar(const Graph& raw) {
    if (raw.size() < 9) return false;
    const Graph g = canonical_graph(raw);
    const auto key = canonical_form(g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool found = has_clique(g, 5) || has_k33_subgraph(g);
    for (int i = 0; i < g.size() && !found; ++i) {
      found = nonplanar(g.without_edge(i)) || nonplanar(contract(g, g.edge(i)));
    }
    memo_[key] = found;
    return found;
  }

 private:
  std::map<CanonicalForm, bool> memo_;
};

}  // namespace

TEST(Planarity, Examples) {
  EXPECT_TRUE(is_planar(Graph::complete(4)).planar);
  EXPECT_FALSE(is_planar(Graph::complete(5)).planar);
  EXPECT_FALSE(is_planar(Graph::complete_bipartite(3, 3)).planar);
  EXPECT_FALSE(is_planar(Graph::petersen()).planar);
  EXPECT_TRUE(is_planar(Graph(0)).planar);
  EXPECT_TRUE(is_planar(Graph::cycle(30)).planar);
  EXPECT_FALSE(is_planar(Graph::complete(5)).certificate.has_value());
}

TEST(Planarity, CertificateIsValidEmbedding) {
  for (const Graph& g : {Graph::complete(4), Graph::cycle(7), Graph::complete_bipartite(2, 5), Graph::path(5),
                         Graph::complete(5).without_edge(3), Graph::complete_bipartite(3, 3).without_edge(0)}) {
    const auto verdict = is_planar(g);
    ASSERT_TRUE(verdict.planar) << g.to_string();
    EXPECT_TRUE(is_planar_embedding(g, *verdict.certificate)) << g.to_string();
  }
}

TEST(Planarity, EulerBoundForcesNonplanar) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const int n = 3 + static_cast<int>(rng() % 8);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 4 != 0) edges.emplace_back(u, v);
    const Graph g(n, edges);
    if (g.size() > 3 * n - 6) EXPECT_FALSE(is_planar(g).planar);
  }
}

TEST(Planarity, AgreesWithRotationOracleUpToSix) {
  GraphCatalog catalog;
  for (int n = 1; n <= 6; ++n) {
    for (int e = 0; e <= n * (n - 1) / 2; ++e) {
      for (const Graph& g : catalog.graphs(ClassSpec::all(), n, e)) {
        const auto verdict = is_planar(g);
        if (n >= 3 && e > 3 * n - 6) {
          EXPECT_FALSE(verdict.planar);
          continue;
        }
        EXPECT_EQ(verdict.planar, planar_by_rotations(g)) << g.to_string();
        if (verdict.planar) EXPECT_TRUE(is_planar_embedding(g, *verdict.certificate)) << g.to_string();
      }
    }
  }
}

TEST(Planarity, AgreesWithMinorOracleUpToSeven) {
  GraphCatalog catalog;
  MinorOracle oracle;
  for (int n = 1; n <= 7; ++n) {
    for (int e = 0; e <= n * (n - 1) / 2; ++e) {
      for (const Graph& g : catalog.graphs(ClassSpec::all(), n, e)) {
        const auto verdict = is_planar(g);
        EXPECT_EQ(verdict.planar, !oracle.nonplanar(g)) << g.to_string();
        if (verdict.planar) EXPECT_TRUE(is_planar_embedding(g, *verdict.certificate)) << g.to_string();
      }
    }
  }
}

TEST(Planarity, RandomRelabelingsAndLargerGraphs) {
  std::mt19937_64 rng(17);
  PlanarityTester tester;
  for (int t = 0; t < 300; ++t) {
    const int n = 5 + static_cast<int>(rng() % 25);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 100 < 12) edges.emplace_back(u, v);
    const Graph g(n, edges);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto verdict = tester.embed(g);
    EXPECT_EQ(verdict.planar, tester.test(g.relabeled(perm)));
    if (verdict.planar) {
      EXPECT_TRUE(is_planar_embedding(g, *verdict.certificate));
      for (int i = 0; i < g.size(); ++i) EXPECT_TRUE(tester.test(g.without_edge(i)));
    }
  }
}

TEST(Planarity, Deterministic) {
  const Graph g = Graph::complete(5).without_edge(0);
  EXPECT_EQ(is_planar(g).certificate, is_planar(g).certificate);
}
