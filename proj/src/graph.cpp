#include "crossing/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace crossing {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  build_adjacency();
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("parallel edge");
  }
  build_adjacency();
}

void Graph::build_adjacency() {
  adjacency_.assign(n_, {});
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

Graph Graph::complete(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph Graph::complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return Graph(a + b, std::move(edges));
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

Graph Graph::path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph Graph::petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph(10, std::move(edges));
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(n_);
  for (int v = 0; v < n_; ++v) out[v] = degree(v);
  return out;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

std::optional<int> Graph::edge_index(Vertex a, Vertex b) const {
  if (a == b) return std::nullopt;
  const Edge key(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

Graph Graph::with_edge(Vertex a, Vertex b) const {
  auto edges = edges_;
  edges.emplace_back(a, b);
  return Graph(n_, std::move(edges));
}

Graph Graph::without_edge(int index) const {
  auto edges = edges_;
  edges.erase(edges.begin() + index);
  return Graph(n_, std::move(edges));
}

Graph Graph::without_edges(std::span<const int> indices) const {
  std::vector<char> drop(edges_.size(), 0);
  for (int i : indices) drop.at(i) = 1;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (!drop[i]) edges.push_back(edges_[i]);
  return Graph(n_, std::move(edges));
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<int> position(n_, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) position.at(keep[i]) = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const Edge& e : edges_) {
    if (position[e.u] >= 0 && position[e.v] >= 0) edges.emplace_back(position[e.u], position[e.v]);
  }
  return Graph(static_cast<int>(keep.size()), std::move(edges));
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const Edge& e : edges_) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph(n_, std::move(edges));
}

Graph Graph::complement() const {
  std::vector<Edge> edges;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (!adjacent(i, j)) edges.emplace_back(i, j);
  return Graph(n_, std::move(edges));
}

std::vector<std::vector<Vertex>> Graph::components() const {
  std::vector<int> seen(n_, 0);
  std::vector<std::vector<Vertex>> out;
  for (int s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w : adjacency_[comp[head]]) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::optional<int> Graph::girth() const {
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n_), parent(n_);
  for (int root = 0; root < n_; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop();
      for (int y : adjacency_[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push(y);
        } else if (parent[x] != y) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::string Graph::to_string() const {
  std::ostringstream os;
  os << "Graph(n=" << n_ << ", edges={";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) os << ", ";
    os << edges_[i].u << '-' << edges_[i].v;
  }
  os << "})";
  return os.str();
}

}  // namespace crossing
