#include "crossing/canonical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace crossing {

std::vector<int> refined_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> signature(n);
    for (int v = 0; v < n; ++v) {
      signature[v].push_back(color[v]);
      std::vector<int> around;
      for (Vertex w : g.neighbors(v)) around.push_back(color[w]);
      std::sort(around.begin(), around.end());
      signature[v].insert(signature[v].end(), around.begin(), around.end());
    }
    std::vector<std::vector<int>> distinct = signature;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), signature[v]) - distinct.begin());
    }
    if (static_cast<int>(distinct.size()) == classes) break;
    classes = static_cast<int>(distinct.size());
  }
  return color;
}

namespace {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : n_(g.order()), rows_(g.order(), 0) {
    for (const Edge& e : g.edges()) {
      rows_[e.u] |= 1u << e.v;
      rows_[e.v] |= 1u << e.u;
    }
    const std::vector<int> color = refined_colors(g);
    std::vector<int> sorted = color;
    std::sort(sorted.begin(), sorted.end());
    cell_of_position_ = sorted;
    color_ = color;
    total_bits_ = n_ * (n_ - 1) / 2;
    placed_.assign(n_, -1);
  }

  CanonicalLabeling run() {
    search(0, 0, 0);
    CanonicalLabeling out;
    out.form = {n_, best_code_};
    out.position.assign(n_, 0);
    for (int p = 0; p < n_; ++p) out.position[best_placed_[p]] = p;
    return out;
  }

 private:
  void search(int position, std::uint32_t used, std::uint64_t prefix) {
    if (position == n_) {
      if (!have_best_ || prefix < best_code_) {
        have_best_ = true;
        best_code_ = prefix;
        best_placed_ = placed_;
      }
      return;
    }
    const int prefix_bits = position * (position + 1) / 2;
    for (int v = 0; v < n_; ++v) {
      if ((used >> v) & 1u) continue;
      if (color_[v] != cell_of_position_[position]) continue;
      std::uint64_t column = 0;
      for (int i = 0; i < position; ++i) column = (column << 1) | ((rows_[placed_[i]] >> v) & 1u);
      const std::uint64_t next = (prefix << position) | column;
      if (have_best_) {
        const std::uint64_t best_prefix = best_code_ >> (total_bits_ - prefix_bits);
        if (next > best_prefix) continue;
      }
      placed_[position] = v;
      search(position + 1, used | (1u << v), next);
    }
    placed_[position] = -1;
  }

  int n_;
  std::vector<std::uint32_t> rows_;
  std::vector<int> color_;
  std::vector<int> cell_of_position_;
  int total_bits_ = 0;
  std::vector<int> placed_;
  bool have_best_ = false;
  std::uint64_t best_code_ = 0;
  std::vector<int> best_placed_;
};

class AutomorphismSearch {
 public:
  AutomorphismSearch(const Graph& g, std::size_t limit) : g_(g), limit_(limit), color_(refined_colors(g)) {
    image_.assign(g.order(), -1);
    taken_.assign(g.order(), 0);
  }

  std::vector<std::vector<Vertex>> run() {
    extend(0);
    return std::move(found_);
  }

 private:
  void extend(int v) {
    if (found_.size() >= limit_) return;
    if (v == g_.order()) {
      found_.push_back(image_);
      return;
    }
    for (int w = 0; w < g_.order(); ++w) {
      if (taken_[w] || color_[w] != color_[v]) continue;
      bool consistent = true;
      for (int u = 0; u < v && consistent; ++u)
        consistent = g_.adjacent(u, v) == g_.adjacent(image_[u], w);
      if (!consistent) continue;
      image_[v] = w;
      taken_[w] = 1;
      extend(v + 1);
      taken_[w] = 0;
      image_[v] = -1;
    }
  }

  const Graph& g_;
  std::size_t limit_;
  std::vector<int> color_;
  std::vector<Vertex> image_;
  std::vector<char> taken_;
  std::vector<std::vector<Vertex>> found_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.order() > 11) throw std::invalid_argument("canonical form supports at most 11 vertices");
  if (g.order() == 0) return {};
  return CanonicalSearch(g).run();
}

Graph canonical_graph(const Graph& g) {
  const auto labeling = canonical_labeling(g);
  return g.relabeled(labeling.position);
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<std::vector<Vertex>> automorphisms(const Graph& g, std::size_t limit) {
  return AutomorphismSearch(g, limit).run();
}

}  // namespace crossing
