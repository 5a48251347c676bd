#include "crossing/planarity.hpp"

#include <algorithm>
#include <numeric>

namespace crossing {

bool PlanarityTester::test(int n, std::span<const Edge> edges) { return run(n, edges, false); }

PlanarityVerdict PlanarityTester::embed(int n, std::span<const Edge> edges) {
  PlanarityVerdict verdict;
  verdict.planar = run(n, edges, true);
  if (verdict.planar) verdict.certificate = rotation_;
  return verdict;
}

bool PlanarityTester::run(int n, std::span<const Edge> edges, bool want_embedding) {
  const int m = static_cast<int>(edges.size());
  if (n >= 3 && m > 3 * n - 6) return false;

  adj_start_.assign(n + 1, 0);
  for (const Edge& e : edges) {
    ++adj_start_[e.u + 1];
    ++adj_start_[e.v + 1];
  }
  for (int v = 0; v < n; ++v) adj_start_[v + 1] += adj_start_[v];
  adj_vertex_.resize(2 * m);
  adj_edge_.resize(2 * m);
  fill_.assign(adj_start_.begin(), adj_start_.end() - 1);
  for (int i = 0; i < m; ++i) {
    const Edge& e = edges[i];
    adj_vertex_[fill_[e.u]] = e.v;
    adj_edge_[fill_[e.u]++] = i;
    adj_vertex_[fill_[e.v]] = e.u;
    adj_edge_[fill_[e.v]++] = i;
  }

  // Arrays written before they are read are only resized.
  height_.assign(n, -1);
  parent_edge_.assign(n, -1);
  tail_.assign(m, -1);
  head_.resize(m);
  lowpt_.resize(m);
  lowpt2_.resize(m);
  nesting_depth_.resize(m);
  out_edges_.resize(2 * m);
  out_count_.assign(n, 0);
  ref_.assign(m, -1);
  side_.assign(m, 1);
  lowpt_edge_.resize(m);
  stack_bottom_.resize(m);
  stack_.clear();
  roots_.clear();

  for (int v = 0; v < n; ++v) {
    if (height_[v] != -1) continue;
    height_[v] = 0;
    roots_.push_back(v);
    orient(v);
  }
  for (int v = 0; v < n; ++v) sort_out_edges(v);
  for (int root : roots_) {
    if (!test_vertex(root)) return false;
  }
  if (want_embedding) build_embedding(n);
  return true;
}

void PlanarityTester::orient(int v) {
  const int e = parent_edge_[v];
  for (int k = adj_start_[v]; k < adj_start_[v + 1]; ++k) {
    const int i = adj_edge_[k];
    if (tail_[i] != -1) continue;
    const int w = adj_vertex_[k];
    tail_[i] = v;
    head_[i] = w;
    out_edges_[adj_start_[v] + out_count_[v]++] = i;
    lowpt_[i] = height_[v];
    lowpt2_[i] = height_[v];
    if (height_[w] == -1) {
      parent_edge_[w] = i;
      height_[w] = height_[v] + 1;
      orient(w);
    } else {
      lowpt_[i] = height_[w];
    }
    nesting_depth_[i] = 2 * lowpt_[i] + (lowpt2_[i] < height_[v] ? 1 : 0);
    if (e != -1) {
      if (lowpt_[i] < lowpt_[e]) {
        lowpt2_[e] = std::min(lowpt_[e], lowpt2_[i]);
        lowpt_[e] = lowpt_[i];
      } else if (lowpt_[i] > lowpt_[e]) {
        lowpt2_[e] = std::min(lowpt2_[e], lowpt_[i]);
      } else {
        lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[i]);
      }
    }
  }
}

// Stable insertion sort by nesting depth; out-degrees are small.
void PlanarityTester::sort_out_edges(int v) {
  int* out = out_edges_.data() + adj_start_[v];
  for (int a = 1; a < out_count_[v]; ++a) {
    const int x = out[a];
    int b = a;
    for (; b > 0 && nesting_depth_[out[b - 1]] > nesting_depth_[x]; --b) out[b] = out[b - 1];
    out[b] = x;
  }
}

int PlanarityTester::lowest(const ConflictPair& p) const {
  if (p.left.empty()) return lowpt_[p.right.low];
  if (p.right.empty()) return lowpt_[p.left.low];
  return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
}

bool PlanarityTester::test_vertex(int v) {
  const int e = parent_edge_[v];
  const int* out = out_edges_.data() + adj_start_[v];
  for (int k = 0; k < out_count_[v]; ++k) {
    const int i = out[k];
    const int w = head_[i];
    stack_bottom_[i] = static_cast<int>(stack_.size());
    if (i == parent_edge_[w]) {
      if (!test_vertex(w)) return false;
    } else {
      lowpt_edge_[i] = i;
      stack_.push_back({Interval{}, Interval{i, i}});
    }
    if (lowpt_[i] < height_[v]) {
      if (k == 0) {
        lowpt_edge_[e] = lowpt_edge_[i];
      } else if (!add_constraints(i, e)) {
        return false;
      }
    }
  }
  if (e != -1) remove_back_edges(e);
  return true;
}

bool PlanarityTester::add_constraints(int ei, int e) {
  ConflictPair p;
  do {
    ConflictPair q = stack_.back();
    stack_.pop_back();
    if (!q.left.empty()) std::swap(q.left, q.right);
    if (!q.left.empty()) return false;
    if (lowpt_[q.right.low] > lowpt_[e]) {
      if (p.right.empty()) {
        p.right = q.right;
      } else {
        ref_[p.right.low] = q.right.high;
      }
      p.right.low = q.right.low;
    } else {
      ref_[q.right.low] = lowpt_edge_[e];
    }
  } while (static_cast<int>(stack_.size()) != stack_bottom_[ei]);

  while (!stack_.empty() && (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
    ConflictPair q = stack_.back();
    stack_.pop_back();
    if (conflicting(q.right, ei)) std::swap(q.left, q.right);
    if (conflicting(q.right, ei)) return false;
    if (p.right.low >= 0) ref_[p.right.low] = q.right.high;
    if (q.right.low >= 0) p.right.low = q.right.low;
    if (p.left.empty()) {
      p.left = q.left;
    } else if (p.left.low >= 0) {
      ref_[p.left.low] = q.left.high;
    }
    p.left.low = q.left.low;
  }
  if (!p.left.empty() || !p.right.empty()) stack_.push_back(p);
  return true;
}

void PlanarityTester::remove_back_edges(int e) {
  const int u = tail_[e];
  while (!stack_.empty() && lowest(stack_.back()) == height_[u]) {
    const ConflictPair p = stack_.back();
    stack_.pop_back();
    if (p.left.low >= 0) side_[p.left.low] = -1;
  }
  if (!stack_.empty()) {
    ConflictPair p = stack_.back();
    stack_.pop_back();
    while (p.left.high >= 0 && head_[p.left.high] == u) p.left.high = ref_[p.left.high];
    if (p.left.high < 0 && p.left.low >= 0) {
      ref_[p.left.low] = p.right.low;
      side_[p.left.low] = -1;
      p.left.low = -1;
    }
    while (p.right.high >= 0 && head_[p.right.high] == u) p.right.high = ref_[p.right.high];
    if (p.right.high < 0 && p.right.low >= 0) {
      ref_[p.right.low] = p.left.low;
      side_[p.right.low] = -1;
      p.right.low = -1;
    }
    stack_.push_back(p);
  }
  if (lowpt_[e] < height_[u] && !stack_.empty()) {
    const int hl = stack_.back().left.high;
    const int hr = stack_.back().right.high;
    if (hl >= 0 && (hr < 0 || lowpt_[hl] > lowpt_[hr])) {
      ref_[e] = hl;
    } else {
      ref_[e] = hr;
    }
  }
}

int PlanarityTester::sign(int e) {
  // Iterative resolution of the ref chain.
  std::vector<int> chain;
  int x = e;
  while (ref_[x] >= 0) {
    chain.push_back(x);
    x = ref_[x];
  }
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    side_[*it] *= side_[ref_[*it]];
    ref_[*it] = -1;
  }
  return side_[e];
}

void PlanarityTester::add_half_edge_cw(int v, int h, int reference) {
  if (reference < 0) {
    cw_[h] = h;
    ccw_[h] = h;
    first_half_[v] = h;
    return;
  }
  const int after = cw_[reference];
  cw_[reference] = h;
  cw_[h] = after;
  ccw_[after] = h;
  ccw_[h] = reference;
}

void PlanarityTester::add_half_edge_ccw(int v, int h, int reference) {
  if (reference < 0) {
    add_half_edge_cw(v, h, -1);
    return;
  }
  add_half_edge_cw(v, h, ccw_[reference]);
  if (reference == first_half_[v]) first_half_[v] = h;
}

void PlanarityTester::build_embedding(int n) {
  const int m = static_cast<int>(tail_.size());
  for (int i = 0; i < m; ++i) nesting_depth_[i] *= sign(i);
  for (int v = 0; v < n; ++v) sort_out_edges(v);
  cw_.assign(2 * m, -1);
  ccw_.assign(2 * m, -1);
  first_half_.assign(n, -1);
  left_ref_.assign(n, -1);
  right_ref_.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    int previous = -1;
    for (int k = 0; k < out_count_[v]; ++k) {
      const int i = out_edges_[adj_start_[v] + k];
      const int h = half_at(i, v);
      add_half_edge_cw(v, h, previous);
      previous = h;
    }
  }
  for (int root : roots_) embed_vertex(root);

  rotation_.around.assign(n, {});
  for (int v = 0; v < n; ++v) {
    const int start = first_half_[v];
    if (start < 0) continue;
    int h = start;
    do {
      const int edge = h / 2;
      rotation_.around[v].push_back(tail_[edge] == v ? head_[edge] : tail_[edge]);
      h = cw_[h];
    } while (h != start);
  }
}

void PlanarityTester::embed_vertex(int v) {
  for (int k = 0; k < out_count_[v]; ++k) {
    const int i = out_edges_[adj_start_[v] + k];
    const int w = head_[i];
    const int at_w = half_at(i, w);
    if (i == parent_edge_[w]) {
      add_half_edge_ccw(w, at_w, first_half_[w]);
      left_ref_[v] = half_at(i, v);
      right_ref_[v] = half_at(i, v);
      embed_vertex(w);
    } else if (side_[i] == 1) {
      add_half_edge_cw(w, at_w, right_ref_[w]);
    } else {
      add_half_edge_ccw(w, at_w, left_ref_[w]);
      left_ref_[w] = at_w;
    }
  }
}

PlanarityVerdict is_planar(const Graph& g) {
  PlanarityTester tester;
  return tester.embed(g);
}

int count_faces(const Graph& g, const RotationSystem& rotation) {
  const int n = g.order();
  std::vector<int> start(n + 1, 0);
  for (int v = 0; v < n; ++v) start[v + 1] = start[v] + static_cast<int>(rotation.around[v].size());
  std::vector<char> seen(start[n], 0);
  auto index_of = [&](int v, int w) {
    const auto& list = rotation.around[v];
    return static_cast<int>(std::find(list.begin(), list.end(), w) - list.begin());
  };
  int faces = 0;
  for (int v = 0; v < n; ++v) {
    const int d = static_cast<int>(rotation.around[v].size());
    for (int k = 0; k < d; ++k) {
      if (seen[start[v] + k]) continue;
      ++faces;
      int a = v;
      int slot = k;
      while (!seen[start[a] + slot]) {
        seen[start[a] + slot] = 1;
        const int b = rotation.around[a][slot];
        const int back = index_of(b, a);
        const int db = static_cast<int>(rotation.around[b].size());
        slot = (back + 1) % db;
        a = b;
      }
    }
  }
  return faces;
}

bool is_planar_embedding(const Graph& g, const RotationSystem& rotation) {
  const int n = g.order();
  if (static_cast<int>(rotation.around.size()) != n) return false;
  for (int v = 0; v < n; ++v) {
    std::vector<Vertex> listed = rotation.around[v];
    std::sort(listed.begin(), listed.end());
    if (listed != g.neighbors(v)) return false;
  }
  const auto components = g.components();
  for (const auto& component : components) {
    std::vector<Vertex> keep = component;
    const Graph sub = g.induced(keep);
    if (sub.size() == 0) continue;
    RotationSystem local;
    local.around.resize(keep.size());
    std::vector<int> index(n, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < keep.size(); ++i) {
      for (Vertex w : rotation.around[keep[i]]) local.around[i].push_back(index[w]);
    }
    const int faces = count_faces(sub, local);
    if (sub.order() - sub.size() + faces != 2) return false;
  }
  return true;
}

}  // namespace crossing
