#include "crossing/book_drawing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace crossing {
namespace {

class BookLayout {
 public:
  explicit BookLayout(const Graph& g) : g_(&g), m_(g.size()), position_(g.order()), page_(g.size(), 0) {}

  void set_order(const std::vector<Vertex>& order) {
    for (std::size_t i = 0; i < order.size(); ++i) position_[order[i]] = static_cast<int>(i);
  }

  bool cross(int a, int b) const {
    if (page_[a] != page_[b]) return false;
    const Edge& ea = g_->edge(a);
    const Edge& eb = g_->edge(b);
    if (ea.shares_endpoint(eb)) return false;
    int a1 = position_[ea.u], a2 = position_[ea.v];
    int b1 = position_[eb.u], b2 = position_[eb.v];
    if (a1 > a2) std::swap(a1, a2);
    if (b1 > b2) std::swap(b1, b2);
    return (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2);
  }

  int cost() const {
    int total = 0;
    for (int a = 0; a < m_; ++a)
      for (int b = a + 1; b < m_; ++b) total += cross(a, b);
    return total;
  }

  int conflicts(int a) const {
    int total = 0;
    for (int b = 0; b < m_; ++b)
      if (b != a) total += cross(a, b);
    return total;
  }

  // Flip edges to the other page while that helps.
  bool improve_pages() {
    bool any = false;
    for (int a = 0; a < m_; ++a) {
      const int before = conflicts(a);
      page_[a] ^= 1;
      if (conflicts(a) < before) {
        any = true;
      } else {
        page_[a] ^= 1;
      }
    }
    return any;
  }

  // Move single vertices to their best slot.
  bool improve_order() {
    const int n = g_->order();
    bool any = false;
    for (int v = 0; v < n; ++v) {
      std::vector<Vertex> order(n);
      for (int w = 0; w < n; ++w) order[position_[w]] = w;
      const int current = cost();
      int best = current, best_slot = position_[v];
      order.erase(order.begin() + position_[v]);
      for (int slot = 0; slot < n; ++slot) {
        std::vector<Vertex> trial = order;
        trial.insert(trial.begin() + slot, v);
        set_order(trial);
        const int c = cost();
        if (c < best) {
          best = c;
          best_slot = slot;
        }
      }
      order.insert(order.begin() + best_slot, v);
      set_order(order);
      any = any || best < current;
    }
    return any;
  }

  void greedy_pages() {
    std::fill(page_.begin(), page_.end(), 0);
    for (int a = 0; a < m_; ++a) {
      int on[2] = {0, 0};
      for (int b = 0; b < a; ++b) {
        page_[a] = page_[b];
        on[page_[b]] += cross(a, b);
      }
      page_[a] = on[1] < on[0] ? 1 : 0;
    }
  }

  const std::vector<int>& positions() const { return position_; }
  const std::vector<int>& pages() const { return page_; }

 private:
  const Graph* g_;
  int m_;
  std::vector<int> position_;
  std::vector<int> page_;
};

// Realizes a layout geometrically: vertex v at x = position + jitter, edges
// as half-circles. Crossing order along an edge follows the x coordinate of
// the intersection point.
std::optional<DrawingCertificate> realize(const Graph& g, const BookLayout& layout, double jitter) {
  const int n = g.order();
  const int m = g.size();
  std::vector<double> x(n);
  for (int v = 0; v < n; ++v) {
    const double frac = std::fmod((v + 1) * 0.6180339887498949, 1.0);
    x[v] = layout.positions()[v] + jitter * frac;
  }
  std::vector<CrossingPair> crossings;
  std::vector<std::vector<std::pair<double, int>>> along(m);
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      if (!layout.cross(a, b)) continue;
      const Edge& ea = g.edge(a);
      const Edge& eb = g.edge(b);
      const double c1 = (x[ea.u] + x[ea.v]) / 2, r1 = std::abs(x[ea.u] - x[ea.v]) / 2;
      const double c2 = (x[eb.u] + x[eb.v]) / 2, r2 = std::abs(x[eb.u] - x[eb.v]) / 2;
      const double meet = (r1 * r1 - r2 * r2 - c1 * c1 + c2 * c2) / (2 * (c2 - c1));
      const int id = static_cast<int>(crossings.size());
      crossings.push_back({a, b});
      along[a].push_back({meet, id});
      along[b].push_back({meet, id});
    }
  }
  std::vector<std::vector<int>> orders(m);
  for (int e = 0; e < m; ++e) {
    auto& list = along[e];
    std::sort(list.begin(), list.end());
    if (x[g.edge(e).u] > x[g.edge(e).v]) std::reverse(list.begin(), list.end());
    for (const auto& [coordinate, id] : list) orders[e].push_back(id);
  }
  auto certificate = make_certificate(g, std::move(crossings), std::move(orders));
  if (!certificate) return std::nullopt;
  sort_crossings(*certificate);
  return certificate;
}

}  // namespace

DrawingCertificate book_drawing(const Graph& g, const BookDrawingOptions& options) {
  const int n = g.order();
  std::mt19937_64 rng(options.seed);
  BookLayout best_layout(g);
  int best_cost = -1;
  for (int restart = 0; restart < std::max(1, options.restarts); ++restart) {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (restart > 0) std::shuffle(order.begin(), order.end(), rng);
    BookLayout layout(g);
    layout.set_order(order);
    layout.greedy_pages();
    for (int round = 0; round < 50; ++round) {
      const bool pages = layout.improve_pages();
      const bool moved = layout.improve_order();
      if (!pages && !moved) break;
    }
    const int c = layout.cost();
    if (best_cost < 0 || c < best_cost) {
      best_cost = c;
      best_layout = layout;
    }
    if (best_cost == 0) break;
  }
  for (double jitter : {1e-3, 1e-2, 0.1, 0.3}) {
    if (auto certificate = realize(g, best_layout, jitter); certificate && verify_certificate(*certificate))
      return *certificate;
  }
  throw std::logic_error("book drawing could not be realized");
}

}  // namespace crossing
