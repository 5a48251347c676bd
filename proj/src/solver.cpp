#include "crossing/solver.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>

#include "crossing/book_drawing.hpp"
#include "crossing/canonical.hpp"
#include "crossing/class_spec.hpp"
#include "crossing/planarity.hpp"

namespace crossing {

int crossing_number_lower_bound(int n, int e) {
  const std::int64_t E = e, N = n;
  std::int64_t best = 0;
  if (n >= 3) best = std::max(best, E - 3 * N + 6);
  auto ceil_div = [](std::int64_t a, std::int64_t b) { return (a + b - 1) / b; };
  if (E > 4 * N) best = std::max(best, ceil_div(E * E * E, 64 * N * N));
  if (E > 7 * N) best = std::max(best, ceil_div(E * E * E, 29 * N * N));
  return static_cast<int>(best);
}

int girth_lower_bound(const Graph& g) {
  const int n = g.order();
  const auto girth = g.girth();
  if (n < 3 || !girth) return 0;
  const int gg = *girth;
  const int planar_max = gg * (n - 2) / (gg - 2);
  return std::max(0, g.size() - planar_max);
}

namespace {

struct State {
  std::vector<CrossingPair> crossings;
  std::vector<std::vector<int>> orders;
  std::vector<char> excluded;
};

enum class Outcome { Found, Exhausted, Aborted };

struct FrontierEntry {
  State state;
  bool hit = false;
};

class Problem {
 public:
  Problem(const Graph& g, bool use_symmetry) : g_(g), m_(g.size()) {
    independent_.assign(static_cast<std::size_t>(m_) * m_, 0);
    for (int a = 0; a < m_; ++a)
      for (int b = 0; b < m_; ++b) independent_[a * m_ + b] = !g.edge(a).shares_endpoint(g.edge(b));
    if (use_symmetry && g.order() <= 12 && m_ > 0) {
      for (const auto& sigma : automorphisms(g, 40320)) {
        std::vector<int> image(m_);
        bool identity = true;
        for (int i = 0; i < m_; ++i) {
          image[i] = *g.edge_index(sigma[g.edge(i).u], sigma[g.edge(i).v]);
          identity = identity && image[i] == i;
        }
        if (!identity) edge_maps_.push_back(std::move(image));
      }
    }
  }

  const Graph& graph() const { return g_; }
  int edges() const { return m_; }
  bool independent(int a, int b) const { return independent_[a * m_ + b]; }
  const std::vector<std::vector<int>>& edge_maps() const { return edge_maps_; }

  State root() const {
    State s;
    s.orders.assign(m_, {});
    s.excluded.assign(static_cast<std::size_t>(m_) * m_, 0);
    return s;
  }

 private:
  const Graph& g_;
  int m_;
  std::vector<char> independent_;
  std::vector<std::vector<int>> edge_maps_;
};

class Searcher {
 public:
  Searcher(const Problem& problem, std::int64_t limit, const std::atomic<int>* cancel = nullptr, int index = 0)
      : problem_(problem), limit_(limit), cancel_(cancel), index_(index) {}

  // Depth-first search below `s` for a planar node with at most k crossings.
  // With a frontier, nodes at depth frontier_depth are collected instead of
  // being evaluated.
  Outcome search(State& s, int k, int frontier_depth = -1, std::vector<FrontierEntry>* frontier = nullptr) {
    const int depth = static_cast<int>(s.crossings.size());
    if (frontier && depth == frontier_depth) {
      frontier->push_back({s, false});
      return Outcome::Exhausted;
    }
    if (nodes_ >= limit_) return Outcome::Aborted;
    if (cancel_ && cancel_->load(std::memory_order_relaxed) < index_) return Outcome::Aborted;
    ++nodes_;
    build_planarization(s);
    if (tester_.test(h_order_, h_edges_)) {
      found_ = s;
      if (frontier) frontier->push_back({s, true});
      return Outcome::Found;
    }
    if (depth >= k) return Outcome::Exhausted;

    const std::vector<CrossingPair> candidates = find_candidates(s);
    if (candidates.empty()) return Outcome::Exhausted;
    const int m = problem_.edges();
    std::vector<char> skip(candidates.size(), 0);
    if (depth == 0) mark_symmetric(candidates, skip);

    // Children rebuild the planarization, so keep this node's segment data.
    const bool last = depth + 1 == k;
    std::vector<char> segment_ok;
    std::vector<int> segment_start;
    if (last) {
      segment_ok = in_subgraph_;
      segment_start = segment_start_;
    }

    std::vector<int> newly_excluded;
    Outcome result = Outcome::Exhausted;
    for (std::size_t i = 0; i < candidates.size() && result == Outcome::Exhausted; ++i) {
      if (i > 0) {
        const auto [pa, pb] = candidates[i - 1];
        s.excluded[pa * m + pb] = 1;
        newly_excluded.push_back(pa * m + pb);
      }
      if (skip[i]) continue;
      const auto [a, b] = candidates[i];
      const int id = depth;
      s.crossings.push_back({a, b});
      const int len_a = static_cast<int>(s.orders[a].size());
      const int len_b = static_cast<int>(s.orders[b].size());
      // With one crossing left it must resolve the extracted subgraph by
      // itself, so it lies on two of its segments.
      for (int x = 0; x <= len_a && result == Outcome::Exhausted; ++x) {
        if (last && !segment_ok[segment_start[a] + x]) continue;
        s.orders[a].insert(s.orders[a].begin() + x, id);
        for (int y = 0; y <= len_b && result == Outcome::Exhausted; ++y) {
          if (last && !segment_ok[segment_start[b] + y]) continue;
          s.orders[b].insert(s.orders[b].begin() + y, id);
          result = search(s, k, frontier_depth, frontier);
          s.orders[b].erase(s.orders[b].begin() + y);
        }
        s.orders[a].erase(s.orders[a].begin() + x);
      }
      s.crossings.pop_back();
    }
    for (int p : newly_excluded) s.excluded[p] = 0;
    return result;
  }

  std::int64_t nodes() const { return nodes_; }
  const std::optional<State>& found() const { return found_; }

 private:
  void build_planarization(const State& s) {
    const Graph& g = problem_.graph();
    const int n = g.order();
    h_order_ = n + static_cast<int>(s.crossings.size());
    h_edges_.clear();
    segment_edge_.clear();
    segment_start_.resize(g.size());
    for (int i = 0; i < g.size(); ++i) {
      segment_start_[i] = static_cast<int>(h_edges_.size());
      Vertex at = g.edge(i).u;
      for (int c : s.orders[i]) {
        h_edges_.emplace_back(at, n + c);
        segment_edge_.push_back(i);
        at = n + c;
      }
      h_edges_.emplace_back(at, g.edge(i).v);
      segment_edge_.push_back(i);
    }
  }

  // Candidate pairs from an edge-minimal nonplanar subgraph of the current
  // planarization (which must be nonplanar).
  std::vector<CrossingPair> find_candidates(const State& s) {
    const int total = static_cast<int>(h_edges_.size());
    std::vector<char>& active = in_subgraph_;
    active.assign(total, 1);
    for (int h = 0; h < total; ++h) {
      active[h] = 0;
      scratch_.clear();
      for (int j = 0; j < total; ++j)
        if (active[j]) scratch_.push_back(h_edges_[j]);
      if (tester_.test(h_order_, scratch_)) active[h] = 1;
    }
    const int m = problem_.edges();
    std::vector<char> in_k(m, 0);
    for (int h = 0; h < total; ++h)
      if (active[h]) in_k[segment_edge_[h]] = 1;
    crossing_.assign(static_cast<std::size_t>(m) * m, 0);
    for (const auto& [a, b] : s.crossings) crossing_[a * m + b] = 1;
    std::vector<CrossingPair> out;
    for (int a = 0; a < m; ++a) {
      if (!in_k[a]) continue;
      for (int b = a + 1; b < m; ++b) {
        if (!in_k[b] || !problem_.independent(a, b)) continue;
        if (crossing_[a * m + b] || s.excluded[a * m + b]) continue;
        out.push_back({a, b});
      }
    }
    return out;
  }

  // A candidate that is the image of an earlier one under an automorphism
  // leads to drawings isomorphic to ones found in that earlier branch.
  void mark_symmetric(const std::vector<CrossingPair>& candidates, std::vector<char>& skip) const {
    if (problem_.edge_maps().empty()) return;
    for (std::size_t j = 1; j < candidates.size(); ++j) {
      for (const auto& map : problem_.edge_maps()) {
        int a = map[candidates[j].first], b = map[candidates[j].second];
        if (a > b) std::swap(a, b);
        const auto it = std::find(candidates.begin(), candidates.begin() + j, CrossingPair{a, b});
        if (it != candidates.begin() + j) {
          skip[j] = 1;
          break;
        }
      }
    }
  }

  const Problem& problem_;
  std::int64_t limit_;
  const std::atomic<int>* cancel_;
  int index_;
  std::int64_t nodes_ = 0;
  std::optional<State> found_;
  PlanarityTester tester_;
  int h_order_ = 0;
  std::vector<Edge> h_edges_;
  std::vector<int> segment_edge_;
  std::vector<int> segment_start_;
  std::vector<char> in_subgraph_;
  std::vector<Edge> scratch_;
  std::vector<char> crossing_;
};

DrawingCertificate certificate_from(const Graph& g, const State& s) {
  auto c = make_certificate(g, s.crossings, s.orders);
  if (!c) throw std::logic_error("search produced a nonplanar witness");
  sort_crossings(*c);
  return *c;
}

struct LevelResult {
  Outcome outcome = Outcome::Exhausted;
  std::int64_t nodes = 0;
  std::optional<State> found;
};

constexpr int kFrontierDepth = 2;

LevelResult run_level_serial(const Problem& problem, int k, std::int64_t remaining) {
  Searcher searcher(problem, remaining);
  State root = problem.root();
  LevelResult r;
  r.outcome = searcher.search(root, k);
  r.nodes = searcher.nodes();
  r.found = searcher.found();
  return r;
}

// Same traversal, split into work items at a fixed depth. Items are searched
// in parallel and reduced in their serial order, so the reported witness and
// the budget verdict match run_level_serial whenever the level completes.
LevelResult run_level_parallel(const Problem& problem, int k, std::int64_t remaining, int workers) {
  std::vector<FrontierEntry> frontier;
  Searcher generator(problem, remaining);
  State root = problem.root();
  const Outcome head = generator.search(root, k, std::min(kFrontierDepth, k), &frontier);
  LevelResult r;
  r.nodes = generator.nodes();
  if (head == Outcome::Aborted) {
    r.outcome = Outcome::Aborted;
    return r;
  }
  const int count = static_cast<int>(frontier.size());
  std::vector<LevelResult> results(count);
  std::atomic<int> first_hit{std::numeric_limits<int>::max()};
  for (int i = 0; i < count; ++i) {
    if (frontier[i].hit) {
      first_hit = i;
      break;
    }
  }
  const std::int64_t left = remaining - r.nodes;

#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (int i = 0; i < count; ++i) {
    if (frontier[i].hit || first_hit.load() < i) continue;
    Searcher searcher(problem, left, &first_hit, i);
    State s = frontier[i].state;
    results[i].outcome = searcher.search(s, k);
    results[i].nodes = searcher.nodes();
    results[i].found = searcher.found();
    if (results[i].outcome == Outcome::Found) {
      int seen = first_hit.load();
      while (i < seen && !first_hit.compare_exchange_weak(seen, i)) {
      }
    }
  }

  std::int64_t used = 0;
  for (int i = 0; i < count; ++i) {
    if (frontier[i].hit) {
      r.outcome = Outcome::Found;
      r.found = frontier[i].state;
      r.nodes += used;
      return r;
    }
    const LevelResult& item = results[i];
    if (used + item.nodes > left || item.outcome == Outcome::Aborted) {
      r.outcome = Outcome::Aborted;
      r.nodes += std::min(left, used + item.nodes);
      return r;
    }
    used += item.nodes;
    if (item.outcome == Outcome::Found) {
      r.outcome = Outcome::Found;
      r.found = item.found;
      r.nodes += used;
      return r;
    }
  }
  r.outcome = Outcome::Exhausted;
  r.nodes += used;
  return r;
}

using BoundCache = std::map<CanonicalForm, int>;

SolveResult solve_impl(const Graph& g, const SolverOptions& options, bool parallel, BoundCache& cache);

// Every crossing has four distinct endpoints, so it survives in exactly n - 4
// of the n vertex-deleted subdrawings: Cr(G) >= sum_v Cr(G - v) / (n - 4).
// Subproblems are solved with a quarter of the remaining budget each; their
// proven lower bounds are used whatever their status.
int vertex_deletion_bound(const Graph& g, const SolverOptions& options, bool parallel, BoundCache& cache,
                          std::int64_t& nodes) {
  const int n = g.order();
  std::int64_t sum = 0;
  std::vector<Vertex> keep;
  for (int v = 0; v < n; ++v) {
    keep.clear();
    for (int w = 0; w < n; ++w)
      if (w != v) keep.push_back(w);
    const Graph h = g.induced(keep);
    if (h.size() == 0) continue;
    const CanonicalForm key = canonical_form(h);
    auto it = cache.find(key);
    if (it == cache.end()) {
      SolverOptions sub = options;
      sub.max_crossings.reset();
      if (options.node_budget) sub.node_budget = std::max<std::int64_t>(0, (*options.node_budget - nodes) / 4);
      const SolveResult r = solve_impl(h, sub, parallel, cache);
      nodes += r.nodes;
      it = cache.emplace(key, r.lower).first;
    }
    sum += it->second;
  }
  return static_cast<int>((sum + n - 5) / (n - 4));
}

SolveResult solve_impl(const Graph& g, const SolverOptions& options, bool parallel, BoundCache& cache) {
  SolveResult result;
  int lower = crossing_number_lower_bound(g);
  if (options.use_girth_bound) lower = std::max(lower, girth_lower_bound(g));

  std::optional<DrawingCertificate> best;
  int upper = std::numeric_limits<int>::max();
  if (options.use_heuristic) {
    best = book_drawing(g);
    upper = best->crossing_count();
  }
  if (options.use_vertex_bound && lower < upper && g.order() >= 5 && g.order() <= EnumerationLimits::kMaxSupported) {
    lower = std::max(lower, vertex_deletion_bound(g, options, parallel, cache, result.nodes));
  }
  result.lower = std::min(lower, upper);
  result.upper = upper;
  result.certificate = best;

  const Problem problem(g, options.use_symmetry);
  const std::int64_t budget = options.node_budget.value_or(std::numeric_limits<std::int64_t>::max());
  const int workers = options.workers > 0 ? options.workers : omp_get_max_threads();
  for (int k = lower; k < upper; ++k) {
    result.lower = k;
    if (options.max_crossings && k > *options.max_crossings) {
      result.status = SolveResult::Status::AboveLimit;
      return result;
    }
    const std::int64_t remaining = std::max<std::int64_t>(0, budget - result.nodes);
    const LevelResult level =
        parallel ? run_level_parallel(problem, k, remaining, workers) : run_level_serial(problem, k, remaining);
    result.nodes += level.nodes;
    if (level.outcome == Outcome::Aborted) {
      result.status = SolveResult::Status::BudgetExceeded;
      return result;
    }
    if (level.outcome == Outcome::Found) {
      result.status = SolveResult::Status::Exact;
      result.lower = result.upper = k;
      result.certificate = certificate_from(g, *level.found);
      return result;
    }
  }
  result.lower = upper;
  if (options.max_crossings && upper > *options.max_crossings) {
    result.status = SolveResult::Status::AboveLimit;
    return result;
  }
  result.status = SolveResult::Status::Exact;
  return result;
}

}  // namespace

SolveResult solve(const Graph& g, const SolverOptions& options) {
  BoundCache cache;
  return solve_impl(g, options, true, cache);
}

SolveResult solve_serial(const Graph& g, const SolverOptions& options) {
  BoundCache cache;
  return solve_impl(g, options, false, cache);
}

CrossingNumber crossing_number(const Graph& g, std::optional<std::int64_t> budget) {
  SolverOptions options;
  options.node_budget = budget;
  SolveResult r = solve(g, options);
  if (r.status != SolveResult::Status::Exact) throw BudgetExceeded(r.lower, r.upper, std::move(r.certificate));
  return {r.upper, std::move(*r.certificate)};
}

std::optional<CrossingNumber> exhaustive_crossing_number(const Graph& g, int max_k) {
  const int m = g.size();
  std::vector<CrossingPair> pairs;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (!g.edge(a).shares_endpoint(g.edge(b))) pairs.push_back({a, b});
  const int total = static_cast<int>(pairs.size());
  PlanarityTester tester;
  for (int k = 0; k <= std::min(max_k, total); ++k) {
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      std::vector<CrossingPair> chosen(k);
      std::vector<std::vector<int>> orders(m);
      for (int i = 0; i < k; ++i) {
        chosen[i] = pairs[pick[i]];
        orders[chosen[i].first].push_back(i);
        orders[chosen[i].second].push_back(i);
      }
      // Odometer over the permutations of every edge's crossings.
      while (true) {
        const Graph h = planarize(g, chosen, orders);
        if (tester.test(h)) {
          auto c = make_certificate(g, chosen, orders);
          return CrossingNumber{k, std::move(*c)};
        }
        int e = 0;
        while (e < m && !std::next_permutation(orders[e].begin(), orders[e].end())) ++e;
        if (e == m) break;
      }
      int i = k - 1;
      while (i >= 0 && pick[i] == total - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace crossing
