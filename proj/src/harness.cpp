#include "crossing/harness.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include <omp.h>

#include "crossing/book_drawing.hpp"
#include "crossing/pst_ops.hpp"
#include "crossing/solver.hpp"

namespace crossing {
namespace {

constexpr int kUnbounded = std::numeric_limits<int>::max();

const std::vector<Graph>& row_graphs(GraphCatalog& catalog, const ClassSpec& spec, int n, int e,
                                     std::vector<Graph>& scratch) {
  if (spec.kind() == ClassSpec::Kind::All && e == n * (n - 1) / 2) {
    scratch = {Graph::complete(n)};
    return scratch;
  }
  return catalog.graphs(spec, n, e);
}

int top_edges(const ClassSpec& spec, int n, const EnumerationLimits& limits) {
  const auto top = max_edges(spec, n, limits);
  if (!top) throw CeilingExceeded("no edge maximum known for " + spec.to_string() + " at n=" + std::to_string(n));
  return *top;
}

}  // namespace

int edge_target(Rational a, int n) {
  const std::int64_t num = a.numerator() * n;
  const std::int64_t den = a.denominator();
  return static_cast<int>(num >= 0 ? (num + den - 1) / den : num / den);
}

namespace {

// Running minimum over the rows processed so far.
struct Incumbent {
  int best = kUnbounded;
  int lower = kUnbounded;
  Graph witness;
  std::optional<DrawingCertificate> certificate;

  void offer(const Graph& g, std::optional<DrawingCertificate>& c) {
    if (c && c->crossing_count() < best) {
      best = c->crossing_count();
      witness = g;
      certificate = std::move(c);
    }
  }
};

// Folds one row into the incumbent: graphs whose lower bound reaches the
// current best are skipped, the others get a heuristic drawing and then, if
// still needed, a search capped at best - 1.
void process_row(const std::vector<Graph>& graphs, const HarnessOptions& options, Incumbent& inc) {
  const int count = static_cast<int>(graphs.size());
  const int threads = options.workers > 0 ? options.workers : omp_get_max_threads();
  std::vector<int> lb(count);
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
  for (int i = 0; i < count; ++i) lb[i] = std::max(crossing_number_lower_bound(graphs[i]), girth_lower_bound(graphs[i]));
  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return lb[x] < lb[y]; });
  std::vector<std::optional<DrawingCertificate>> drawn(count);
  const int cap = inc.best;
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
  for (int i = 0; i < count; ++i)
    if (lb[i] < cap) drawn[i] = book_drawing(graphs[i]);
  for (int i : order) inc.offer(graphs[i], drawn[i]);
  for (int i : order) {
    if (lb[i] >= inc.best) {
      inc.lower = std::min(inc.lower, lb[i]);
      continue;
    }
    SolverOptions so;
    so.node_budget = options.node_budget;
    so.workers = options.workers;
    so.max_crossings = inc.best - 1;
    SolveResult r = solve(graphs[i], so);
    inc.lower = std::min(inc.lower, r.lower);
    if (r.status != SolveResult::Status::AboveLimit) inc.offer(graphs[i], r.certificate);
  }
}

KappaRecord snapshot(const ClassSpec& spec, int n, int e, const Incumbent& inc) {
  KappaRecord rec;
  rec.spec = spec;
  rec.n = n;
  rec.e = e;
  rec.kappa = inc.best;
  rec.lower = std::min(inc.lower, inc.best);
  rec.exact = rec.lower == inc.best;
  rec.witness = inc.witness;
  rec.certificate = inc.certificate;
  return rec;
}

int checked_top(const ClassSpec& spec, int n, int e_min, const EnumerationLimits& limits) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const int top = top_edges(spec, n, limits);
  if (e_min > top)
    throw ClassEmpty(spec.to_string() + " has no graph on " + std::to_string(n) + " vertices with " +
                     std::to_string(e_min) + " edges");
  return top;
}

}  // namespace

std::vector<KappaRecord> kappa_row(const ClassSpec& spec, int n, int e_min, const HarnessOptions& options) {
  e_min = std::max(e_min, 0);
  const int top = checked_top(spec, n, e_min, options.limits);
  GraphCatalog local(options.limits);
  GraphCatalog& catalog = options.catalog ? *options.catalog : local;
  Incumbent inc;
  std::vector<KappaRecord> records;
  std::vector<Graph> scratch;
  for (int e = top; e >= e_min; --e) {
    process_row(row_graphs(catalog, spec, n, e, scratch), options, inc);
    records.push_back(snapshot(spec, n, e, inc));
  }
  std::reverse(records.begin(), records.end());
  return records;
}

KappaRecord kappa(const ClassSpec& spec, int n, int e, const HarnessOptions& options) {
  e = std::max(e, 0);
  const int top = checked_top(spec, n, e, options.limits);
  GraphCatalog local(options.limits);
  GraphCatalog& catalog = options.catalog ? *options.catalog : local;
  // Upwards from e: row e usually fixes the value and the lower bounds of
  // the denser rows then rule them out without search.
  Incumbent inc;
  std::vector<Graph> scratch;
  for (int row = e; row <= top; ++row) process_row(row_graphs(catalog, spec, n, row, scratch), options, inc);
  return snapshot(spec, n, e, inc);
}

std::vector<KappaRecord> kappa_table(const ClassSpec& spec, int n_max, const HarnessOptions& options) {
  GraphCatalog local(options.limits);
  HarnessOptions shared = options;
  if (!shared.catalog) shared.catalog = &local;
  std::vector<KappaRecord> table;
  for (int n = 1; n <= n_max; ++n) {
    auto row = kappa_row(spec, n, 0, shared);
    for (auto& r : row) table.push_back(std::move(r));
  }
  return table;
}

GammaSeries gamma_series(const ClassSpec& spec, Rational a, const std::vector<int>& n_list,
                         const HarnessOptions& options) {
  GammaSeries series;
  series.spec = spec;
  series.a = a;
  std::vector<int> ns = n_list;
  std::sort(ns.begin(), ns.end());
  for (int n : ns) {
    const int e = edge_target(a, n);
    const KappaRecord r = kappa(spec, n, e, options);
    series.points.push_back({n, e, r.kappa, r.exact, Rational(r.kappa, n)});
  }
  return series;
}

std::vector<SubadditivityViolation> subadditivity_audit(const std::vector<KappaRecord>& records) {
  std::map<std::pair<int, int>, const KappaRecord*> at;
  for (const auto& r : records)
    if (r.exact) at[{r.n, r.e}] = &r;
  std::vector<SubadditivityViolation> out;
  for (auto i = at.begin(); i != at.end(); ++i) {
    for (auto j = i; j != at.end(); ++j) {
      const KappaRecord& x = *i->second;
      const KappaRecord& y = *j->second;
      const auto sum = at.find({x.n + y.n, x.e + y.e});
      if (sum == at.end()) continue;
      if (sum->second->kappa > x.kappa + y.kappa)
        out.push_back({x.n, x.e, x.kappa, y.n, y.e, y.kappa, sum->second->kappa});
    }
  }
  return out;
}

std::vector<CrossingLemmaViolation> crossing_lemma_audit(const std::vector<KappaRecord>& records) {
  std::vector<CrossingLemmaViolation> out;
  for (const auto& r : records) {
    if (!r.exact) continue;
    const __int128 cube = static_cast<__int128>(r.e) * r.e * r.e;
    const __int128 scale = static_cast<__int128>(r.n) * r.n * r.kappa;
    if (r.e > 4 * r.n && 64 * scale < cube) out.push_back({r.n, r.e, r.kappa, 64});
    if (r.e > 7 * r.n && 29 * scale < cube) out.push_back({r.n, r.e, r.kappa, 29});
  }
  return out;
}

std::vector<MonotonicityViolation> monotonicity_audit(const std::vector<KappaRecord>& records) {
  std::vector<MonotonicityViolation> out;
  std::map<std::pair<int, int>, const KappaRecord*> at;
  for (const auto& r : records)
    if (r.exact) at[{r.n, r.e}] = &r;
  for (const auto& [key, x] : at) {
    // Next exact point in e at the same n, and the same e at n + 1.
    auto next = std::next(at.find(key));
    if (next != at.end() && next->first.first == x->n && x->kappa > next->second->kappa)
      out.push_back({x->n, x->e, x->kappa, next->second->n, next->second->e, next->second->kappa});
    const auto wider = at.find({x->n + 1, x->e});
    if (wider != at.end() && x->kappa < wider->second->kappa)
      out.push_back({x->n, x->e, x->kappa, wider->second->n, wider->second->e, wider->second->kappa});
  }
  return out;
}

std::vector<MonotonicityViolation> dominance_audit(const std::vector<KappaRecord>& first,
                                                   const std::vector<KappaRecord>& second) {
  std::map<std::pair<int, int>, const KappaRecord*> at;
  for (const auto& r : second)
    if (r.exact) at[{r.n, r.e}] = &r;
  std::vector<MonotonicityViolation> out;
  for (const auto& x : first) {
    if (!x.exact) continue;
    const auto y = at.find({x.n, x.e});
    if (y != at.end() && x.kappa > y->second->kappa)
      out.push_back({x.n, x.e, x.kappa, y->second->n, y->second->e, y->second->kappa});
  }
  return out;
}

SandwichReport sandwich_audit(const ClassSpec& spec, Rational a, int n, const HarnessOptions& options) {
  if (a < Rational(4)) throw PreconditionFailed("sandwich audit needs a >= 4");
  if (Rational(n) < Rational(2) * a + 1) throw PreconditionFailed("sandwich audit needs n >= 2a + 1");
  SandwichReport report;
  report.a = a;
  report.n = n;
  report.e = edge_target(a, n);
  report.record = kappa(spec, n, report.e, options);
  const Rational cube = a * a * a;
  const Rational low = cube * n / 100;
  const Rational high = Rational(8) * cube * n;
  const KappaRecord& r = report.record;
  if (Rational(r.lower) >= low) report.lower_side = SideStatus::Verified;
  else if (r.exact) report.lower_side = SideStatus::Violated;
  if (Rational(r.kappa) <= high) report.upper_side = SideStatus::Verified;
  else if (r.exact || Rational(r.lower) > high) report.upper_side = SideStatus::Violated;
  return report;
}

ConvexityReport convexity_probe(int n, const ConvexityPoint& p1, const ConvexityPoint& p2, const ConvexityPoint& p3) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (p1.a > p2.a || p2.a > p3.a) throw std::invalid_argument("convexity probe needs a1 <= a2 <= a3");
  ConvexityReport report;
  report.lambda = p1.a == p3.a ? Rational(1) : (p3.a - p2.a) / (p3.a - p1.a);
  report.lhs = Rational(p2.kappa, n);
  report.rhs = report.lambda * Rational(p1.kappa, n) + (Rational(1) - report.lambda) * Rational(p3.kappa, n);
  report.holds = report.lhs <= report.rhs;
  return report;
}

DEstimate d_estimate(const ClassSpec& spec, const std::vector<std::pair<Rational, int>>& grid,
                     const HarnessOptions& options) {
  if (grid.empty()) throw EmptyGrid("d_estimate needs at least one grid point");
  DEstimate out;
  out.spec = spec;
  out.exact = true;
  for (const auto& [a, n] : grid) {
    if (a <= Rational(0)) throw std::invalid_argument("grid densities must be positive");
    const int e = edge_target(a, n);
    const KappaRecord r = kappa(spec, n, e, options);
    GammaPoint p{n, e, r.kappa, r.exact, Rational(r.kappa, n)};
    out.d_value = std::max(out.d_value, p.value / (a * a * a));
    out.exact = out.exact && r.exact;
    out.grid.push_back({a, p});
  }
  out.window_ok = out.d_value >= Rational(1, 100) && out.d_value <= Rational(8);
  return out;
}

}  // namespace crossing
