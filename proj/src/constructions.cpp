#include "crossing/constructions.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

namespace crossing {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct TrialCounts {
  std::int64_t nu = 0, eta = 0, xi = 0;
};

struct Sums {
  // Plain integer totals; x and x^2 per variable.
  std::int64_t s[3] = {0, 0, 0};
  __int128 q[3] = {0, 0, 0};

  void add(const TrialCounts& t) {
    const std::int64_t x[3] = {t.nu, t.eta, t.xi};
    for (int i = 0; i < 3; ++i) {
      s[i] += x[i];
      q[i] += static_cast<__int128>(x[i]) * x[i];
    }
  }
  void merge(const Sums& o) {
    for (int i = 0; i < 3; ++i) {
      s[i] += o.s[i];
      q[i] += o.q[i];
    }
  }
};

class Sampler {
 public:
  Sampler(const DrawingCertificate& c, double p) : c_(c), p_(p), kept_(c.base.order()) {}

  TrialCounts trial(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    TrialCounts t;
    for (int v = 0; v < c_.base.order(); ++v) {
      kept_[v] = static_cast<double>(rng() >> 11) * 0x1.0p-53 < p_;
      t.nu += kept_[v];
    }
    for (const Edge& e : c_.base.edges()) t.eta += kept_[e.u] && kept_[e.v];
    for (const auto& [a, b] : c_.crossings) {
      const Edge& x = c_.base.edge(a);
      const Edge& y = c_.base.edge(b);
      t.xi += kept_[x.u] && kept_[x.v] && kept_[y.u] && kept_[y.v];
    }
    return t;
  }

 private:
  const DrawingCertificate& c_;
  double p_;
  std::vector<char> kept_;
};

void check_sampling(double p, std::int64_t trials) {
  if (!(p > 0.0 && p <= 1.0)) throw InvalidProbability("inclusion probability must lie in (0, 1]");
  if (trials < 1) throw std::invalid_argument("trials must be positive");
}

SampleStats finish(const Sums& sums, double p, std::int64_t trials, std::uint64_t seed) {
  SampleStats out;
  out.p = p;
  out.trials = trials;
  out.seed = seed;
  double mean[3], var[3];
  for (int i = 0; i < 3; ++i) {
    mean[i] = static_cast<double>(sums.s[i]) / static_cast<double>(trials);
    var[i] = 0;
    if (trials > 1) {
      const __int128 num = static_cast<__int128>(trials) * sums.q[i] - static_cast<__int128>(sums.s[i]) * sums.s[i];
      var[i] = static_cast<double>(num) / (static_cast<double>(trials) * static_cast<double>(trials - 1));
    }
  }
  out.nu_mean = mean[0];
  out.eta_mean = mean[1];
  out.xi_mean = mean[2];
  out.nu_var = var[0];
  out.eta_var = var[1];
  out.xi_var = var[2];
  return out;
}

}  // namespace

SampleStats sample_induced_serial(const DrawingCertificate& c, double p, std::int64_t trials, std::uint64_t seed) {
  check_sampling(p, trials);
  Sampler sampler(c, p);
  Sums sums;
  for (std::int64_t t = 0; t < trials; ++t) sums.add(sampler.trial(splitmix64(splitmix64(seed) + static_cast<std::uint64_t>(t))));
  return finish(sums, p, trials, seed);
}

SampleStats sample_induced(const DrawingCertificate& c, double p, std::int64_t trials, std::uint64_t seed,
                           int workers) {
  check_sampling(p, trials);
  if (workers <= 0) workers = omp_get_max_threads();
  Sums total;
#pragma omp parallel num_threads(workers)
  {
    Sampler sampler(c, p);
    Sums local;
#pragma omp for schedule(static)
    for (std::int64_t t = 0; t < trials; ++t)
      local.add(sampler.trial(splitmix64(splitmix64(seed) + static_cast<std::uint64_t>(t))));
#pragma omp critical
    total.merge(local);
  }
  return finish(total, p, trials, seed);
}

ExactExpectations exact_expectations(const DrawingCertificate& c, Rational p) {
  if (p <= Rational(0) || p > Rational(1)) throw InvalidProbability("inclusion probability must lie in (0, 1]");
  const Rational p2 = p * p;
  return {p * c.base.order(), p2 * c.base.size(), p2 * p2 * c.crossing_count()};
}

std::pair<double, double> chebyshev_bounds(double n, double e, double p, double slack) {
  if (!(p > 0.0 && p <= 1.0)) throw InvalidProbability("inclusion probability must lie in (0, 1]");
  if (!(slack > 0.0)) throw std::invalid_argument("slack must be positive");
  // Pr[|nu - pn| > s pn] <= pn / (s pn)^2; Pr[|eta - p^2 e| > s p^2 e] <= 2p^3 en / (s p^2 e)^2.
  const double nu = 1.0 / (slack * slack * p * n);
  const double eta = 2.0 * n / (slack * slack * p * e);
  return {nu, eta};
}

// ---------------------------------------------------------------------------
// Splitting

namespace {

// Edge of `base` whose route leaves x towards skeleton neighbour w.
std::map<std::pair<Vertex, Vertex>, int> first_hops(const DrawingCertificate& c) {
  const int n = c.base.order();
  std::map<std::pair<Vertex, Vertex>, int> hop;
  for (int e = 0; e < c.base.size(); ++e) {
    const Edge& edge = c.base.edge(e);
    const auto& order = c.edge_orders[e];
    const Vertex after_u = order.empty() ? edge.v : n + order.front();
    const Vertex before_v = order.empty() ? edge.u : n + order.back();
    hop[{edge.u, after_u}] = e;
    hop[{edge.v, before_v}] = e;
  }
  return hop;
}

DrawingCertificate build(Graph base, std::vector<CrossingPair> crossings, std::vector<std::vector<int>> orders) {
  auto certificate = make_certificate(std::move(base), std::move(crossings), std::move(orders));
  if (!certificate) throw std::logic_error("construction produced a nonplanar planarization");
  return std::move(*certificate);
}

}  // namespace

DrawingCertificate split_to_max_degree(const DrawingCertificate& c, int t) {
  if (t < 1) throw std::invalid_argument("degree threshold must be at least 1");
  const Graph& g = c.base;
  const int n = g.order();
  const auto hop = first_hops(c);
  // new_end[e][0 / 1] = new label of edge e's lower / higher endpoint.
  std::vector<std::array<Vertex, 2>> new_end(g.size());
  for (int e = 0; e < g.size(); ++e) new_end[e] = {g.edge(e).u, g.edge(e).v};
  int next = n;
  for (Vertex v = 0; v < n; ++v) {
    const auto& around = c.skeleton_rotation.around[v];
    const int d = static_cast<int>(around.size());
    if (d <= t) continue;
    for (int j = 0; j < d; ++j) {
      const int e = hop.at({v, around[j]});
      const Vertex label = j < t ? v : next + j / t - 1;
      new_end[e][g.edge(e).u == v ? 0 : 1] = label;
    }
    next += (d + t - 1) / t - 1;
  }
  std::vector<Edge> edges;
  for (const auto& [a, b] : new_end) edges.emplace_back(a, b);
  Graph split(next, edges);
  std::vector<int> index(g.size());
  std::vector<std::vector<int>> orders(g.size());
  for (int e = 0; e < g.size(); ++e) {
    index[e] = *split.edge_index(new_end[e][0], new_end[e][1]);
    orders[index[e]] = c.edge_orders[e];
    if (new_end[e][0] > new_end[e][1]) std::reverse(orders[index[e]].begin(), orders[index[e]].end());
  }
  std::vector<CrossingPair> crossings;
  for (const auto& [a, b] : c.crossings) crossings.emplace_back(std::min(index[a], index[b]), std::max(index[a], index[b]));
  return build(std::move(split), std::move(crossings), std::move(orders));
}

// ---------------------------------------------------------------------------
// Blow-up

namespace {

struct Point {
  double x = 0, y = 0;
};
Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }

// Proper intersection parameters (s on ab, t on cd), if any.
std::optional<std::pair<double, double>> intersect(Point a, Point b, Point c, Point d) {
  const Point r = b - a, s = d - c;
  const double den = cross(r, s);
  if (den == 0) return std::nullopt;
  const double u = cross(c - a, s) / den;
  const double v = cross(c - a, r) / den;
  if (u <= 0 || u >= 1 || v <= 0 || v >= 1) return std::nullopt;
  return std::pair{u, v};
}

// Piece of a strand inside one disk, oriented from the strand's lower
// endpoint towards its higher endpoint.
struct Piece {
  int strand;
  std::vector<Point> path;
  int hub = -1;  // clone the piece starts from in a vertex disk
};

// Crossings among the pieces of one disk; appends (position, crossing id)
// to each strand's per-disk list.
void cross_pieces(const std::vector<Piece>& pieces, std::vector<CrossingPair>& crossings,
                  std::vector<std::vector<std::pair<double, int>>>& hits) {
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      const Piece& a = pieces[i];
      const Piece& b = pieces[j];
      if (a.strand == b.strand || (a.hub >= 0 && a.hub == b.hub)) continue;
      for (std::size_t x = 0; x + 1 < a.path.size(); ++x) {
        for (std::size_t y = 0; y + 1 < b.path.size(); ++y) {
          const auto hit = intersect(a.path[x], a.path[x + 1], b.path[y], b.path[y + 1]);
          if (!hit) continue;
          const int id = static_cast<int>(crossings.size());
          crossings.push_back({a.strand, b.strand});
          hits[a.strand].push_back({static_cast<double>(x) + hit->first, id});
          hits[b.strand].push_back({static_cast<double>(y) + hit->second, id});
        }
      }
    }
  }
}

// Port j of a disk with d ports: outward direction and its left normal.
struct Port {
  Point center, out, left;
};
Port port(int j, int d) {
  const double theta = -2 * std::numbers::pi * j / d;
  const Point out{std::cos(theta), std::sin(theta)};
  return {out, out, {-out.y, out.x}};
}

// Lateral offset of outward rank i among count strands, half-width h.
double offset(int i, int count, double h) { return count == 1 ? 0.0 : h * (count - 1 - 2 * i) / (count - 1); }

// Removes crossings whose dummy is not of the form e, f, e, f in the
// rotation; such edges only touch there, and the remaining drawing stays
// planar.
DrawingCertificate normalized(DrawingCertificate c) {
  for (;;) {
    const int n = c.base.order();
    int bad = -1;
    for (int i = 0; i < c.crossing_count() && bad < 0; ++i) {
      const auto& around = c.skeleton_rotation.around[n + i];
      const auto& oa = c.edge_orders[c.crossings[i].first];
      const auto pos = std::find(oa.begin(), oa.end(), i) - oa.begin();
      const Edge& ea = c.base.edge(c.crossings[i].first);
      const Vertex prev = pos == 0 ? ea.u : n + oa[pos - 1];
      const int p = static_cast<int>(std::find(around.begin(), around.end(), prev) - around.begin());
      const Vertex next = pos + 1 == static_cast<long>(oa.size()) ? ea.v : n + oa[pos + 1];
      if (around[(p + 2) % 4] != next) bad = i;
    }
    if (bad < 0) return c;
    std::vector<CrossingPair> crossings;
    for (int i = 0; i < c.crossing_count(); ++i)
      if (i != bad) crossings.push_back(c.crossings[i]);
    auto orders = c.edge_orders;
    for (auto& list : orders) {
      list.erase(std::remove(list.begin(), list.end(), bad), list.end());
      for (int& x : list) x -= x > bad;
    }
    c = build(c.base, std::move(crossings), std::move(orders));
  }
}

}  // namespace

BlowupResult blow_up(const DrawingCertificate& input, const BlowupParams& params) {
  if (params.L < 1 || params.K < 1 || params.degree_threshold < 1)
    throw std::invalid_argument("blow-up parameters must be positive");
  const int L = params.L, K = params.K, S = L * L;
  const std::int64_t L4 = static_cast<std::int64_t>(S) * S;
  std::int64_t adjacent_pairs = 0;
  for (int d : input.base.degrees()) adjacent_pairs += static_cast<std::int64_t>(d) * (d - 1) / 2;
  BlowupResult result;
  result.bound = K * L4 * (input.crossing_count() + adjacent_pairs);

  const DrawingCertificate c = normalized(input);
  const Graph& g = c.base;
  const int n = g.order(), m = g.size();
  const auto& rotation = c.skeleton_rotation.around;

  // Clone positions inside a vertex disk of radius 1.
  std::vector<Point> clone_at(L);
  for (int a = 0; a < L; ++a) {
    const double phi = 2 * std::numbers::pi * a / L + 0.4;
    clone_at[a] = 0.3 * Point{std::cos(phi), std::sin(phi)};
  }
  // Clone ranks at a port, by the slope seen from the port (leftmost first);
  // equal to the order in which straight segments reach a narrow port
  // without crossing.
  auto ranks_at = [&](const Port& q) {
    std::vector<int> order(L);
    for (int a = 0; a < L; ++a) order[a] = a;
    auto slope = [&](int a) {
      const Point r = clone_at[a] - q.center;
      return dot(r, q.left) / -dot(r, q.out);
    };
    std::sort(order.begin(), order.end(), [&](int x, int y) { return slope(x) > slope(y); });
    return order;
  };

  // Per edge: endpoint ports, nesting, and strand order (strand = a*L + b
  // for clones a of u and b of v) by left rank walking from u to v.
  struct Ribbon {
    int port[2] = {0, 0};
    int nested = -1;  // endpoint (0 = u, 1 = v) drawn nested, if any
    std::vector<int> order;
  };
  std::vector<Ribbon> ribbons(m);
  for (int e = 0; e < m; ++e) {
    const Edge& edge = g.edge(e);
    Ribbon& r = ribbons[e];
    const Vertex ends[2] = {edge.u, edge.v};
    std::vector<int> rank[2];
    for (int side = 0; side < 2; ++side) {
      const auto& around = rotation[ends[side]];
      const auto& order = c.edge_orders[e];
      const Vertex w = order.empty() ? ends[1 - side] : n + (side == 0 ? order.front() : order.back());
      r.port[side] = static_cast<int>(std::find(around.begin(), around.end(), w) - around.begin());
      rank[side] = ranks_at(port(r.port[side], static_cast<int>(around.size())));
    }
    if (L == 2) {
      if (g.degree(edge.u) == 1) r.nested = 0;
      else if (g.degree(edge.v) == 1) r.nested = 1;
    }
    auto id = [L](int a, int b) { return a * L + b; };
    if (r.nested == 0) {
      // Outward at u: (k,y0), (f,y0), (f,y1), (k,y1) with y0 ranked last at v.
      const int y0 = rank[1][1], y1 = rank[1][0];
      r.order = {id(1, y0), id(0, y0), id(0, y1), id(1, y1)};
    } else if (r.nested == 1) {
      const int y0 = rank[0][1], y1 = rank[0][0];
      // Outward at v, then reversed into u-to-v order.
      r.order = {id(y0, 1), id(y0, 0), id(y1, 0), id(y1, 1)};
      std::reverse(r.order.begin(), r.order.end());
    } else {
      // Grouped by u-clone in u's rank order; inside a group v-clones in
      // reverse v rank (v sees the ribbon mirrored).
      for (int a : rank[0])
        for (int i = L - 1; i >= 0; --i) r.order.push_back(id(a, rank[1][i]));
    }
  }

  // Pieces per disk: vertex disks 0..n-1, dummy disks n+i.
  const int disks = n + c.crossing_count();
  std::vector<std::vector<Piece>> pieces(disks);
  std::vector<std::vector<int>> route(m * S);  // disks visited by each local strand, in order
  for (int e = 0; e < m; ++e) {
    const Edge& edge = g.edge(e);
    const Ribbon& r = ribbons[e];
    const auto& order = c.edge_orders[e];
    for (int i = 0; i < S; ++i) {
      const int s = r.order[i];
      const int strand = e * S + s;
      const int a = s / L, b = s % L;
      for (int side = 0; side < 2; ++side) {
        const Vertex x = side == 0 ? edge.u : edge.v;
        const int d = static_cast<int>(rotation[x].size());
        const Port q = port(r.port[side], d);
        const int rank = side == 0 ? i : S - 1 - i;
        std::vector<Point> path;
        if (r.nested == side) {
          // Front clone 0 on the port axis, back clone 1 behind it; the back
          // clone's strands pass around the front one.
          const double h = 0.4;
          const Point tip = q.center + offset(rank, S, h) * q.left;
          if ((side == 0 ? a : b) == 0) {
            path = {0.3 * q.out, tip};
          } else {
            const double sign = rank == 0 ? 1.0 : -1.0;
            path = {-0.3 * q.out, 0.3 * q.out + sign * 0.3 * q.left, tip};
          }
        } else {
          const double h = 1e-3 * std::sin(std::numbers::pi / std::max(d, 2));
          path = {clone_at[side == 0 ? a : b], q.center + offset(rank, S, h) * q.left};
        }
        if (side == 1) std::reverse(path.begin(), path.end());
        pieces[x].push_back({strand, std::move(path), side == 0 ? a : b});
      }
      // Dummy disks: straight chords, entry rank S-1-i, exit rank i.
      for (std::size_t k = 0; k < order.size(); ++k) {
        const int dummy = n + order[k];
        const auto& around = rotation[dummy];
        const Vertex prev = k == 0 ? edge.u : n + order[k - 1];
        const int p = static_cast<int>(std::find(around.begin(), around.end(), prev) - around.begin());
        const Port in = port(p, 4), out = port((p + 2) % 4, 4);
        const double h = 0.5;
        pieces[dummy].push_back(
            {strand, {in.center + offset(S - 1 - i, S, h) * in.left, out.center + offset(i, S, h) * out.left}});
      }
      route[strand].push_back(edge.u);
      for (int k : order) route[strand].push_back(n + k);
      route[strand].push_back(edge.v);
    }
  }

  // Local crossings and per-strand orders.
  std::vector<CrossingPair> local;
  std::vector<std::vector<int>> local_orders(m * S);
  {
    std::vector<std::vector<std::vector<std::pair<double, int>>>> per_disk(disks);
    for (int x = 0; x < disks; ++x) {
      per_disk[x].resize(m * S);
      cross_pieces(pieces[x], local, per_disk[x]);
    }
    for (int strand = 0; strand < m * S; ++strand) {
      for (int x : route[strand]) {
        auto& list = per_disk[x][strand];
        std::sort(list.begin(), list.end());
        for (const auto& [position, id] : list) local_orders[strand].push_back(id);
      }
    }
  }

  // Replicate into K copies.
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(K) * m * S);
  auto endpoints = [&](int copy, int strand) {
    const Edge& edge = g.edge(strand / S);
    const int a = strand % S / L, b = strand % L;
    const Vertex base = copy * L * n;
    return Edge(base + edge.u * L + a, base + edge.v * L + b);
  };
  for (int copy = 0; copy < K; ++copy)
    for (int strand = 0; strand < m * S; ++strand) edges.push_back(endpoints(copy, strand));
  Graph blown(K * L * n, edges);
  const int X = static_cast<int>(local.size());
  std::vector<CrossingPair> crossings;
  std::vector<std::vector<int>> orders(blown.size());
  for (int copy = 0; copy < K; ++copy) {
    std::vector<int> index(m * S);
    for (int strand = 0; strand < m * S; ++strand) {
      const Edge ep = endpoints(copy, strand);
      index[strand] = *blown.edge_index(ep.u, ep.v);
      auto& list = orders[index[strand]];
      for (int id : local_orders[strand]) list.push_back(copy * X + id);
    }
    for (const auto& [a, b] : local) crossings.emplace_back(std::min(index[a], index[b]), std::max(index[a], index[b]));
  }
  result.certificate = build(std::move(blown), std::move(crossings), std::move(orders));
  sort_crossings(result.certificate);
  result.counted = result.certificate.crossing_count();
  return result;
}

}  // namespace crossing
