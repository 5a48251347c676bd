#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "crossing/certificate.hpp"
#include "crossing/class_spec.hpp"
#include "crossing/constructions.hpp"
#include "crossing/enumerate.hpp"

namespace crossing {

class ClassEmpty : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EmptyGrid : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// kappa(n, e): least crossing number over class members with n vertices
/// and at least e edges. `kappa` is the best upper bound found (witnessed by
/// `witness` and `certificate`), `lower` a proven lower bound; exact iff they
/// agree.
struct KappaRecord {
  ClassSpec spec = ClassSpec::all();
  int n = 0;
  int e = 0;
  int kappa = 0;
  int lower = 0;
  bool exact = false;
  Graph witness;
  std::optional<DrawingCertificate> certificate;
};

struct HarnessOptions {
  /// Node budget of each individual solver call.
  std::optional<std::int64_t> node_budget = 2'000'000;
  int workers = 0;
  EnumerationLimits limits;
  /// Shared enumeration cache; a private one is used when null.
  GraphCatalog* catalog = nullptr;
};

/// Records for e = e_min .. max_edges(spec, n), ascending in e.
///
/// Rows are processed from the top down, so the best value of the rows above
/// caps the search in each row: only graphs whose lower bound is below the
/// current best are solved, each with max_crossings = best - 1. For All,
/// the complete-graph row needs no enumeration, so it is also available
/// above the enumeration ceiling.
std::vector<KappaRecord> kappa_row(const ClassSpec& spec, int n, int e_min, const HarnessOptions& options = {});

/// Throws ClassEmpty when e exceeds max_edges(spec, n).
KappaRecord kappa(const ClassSpec& spec, int n, int e, const HarnessOptions& options = {});

/// All rows for n = 1 .. n_max, ordered by (n, e).
std::vector<KappaRecord> kappa_table(const ClassSpec& spec, int n_max, const HarnessOptions& options = {});

struct GammaPoint {
  int n = 0;
  int e = 0;
  int kappa = 0;
  bool exact = false;
  Rational value;  // kappa / n
};

struct GammaSeries {
  ClassSpec spec = ClassSpec::all();
  Rational a;
  std::vector<GammaPoint> points;
};

/// Points (n, kappa(n, ceil(a n)) / n); raw data, no extrapolation.
GammaSeries gamma_series(const ClassSpec& spec, Rational a, const std::vector<int>& n_list,
                         const HarnessOptions& options = {});

struct SubadditivityViolation {
  int n1, e1, kappa1;
  int n2, e2, kappa2;
  int kappa_sum_point;
};

/// Over exact records: kappa(n1+n2, e1+e2) <= kappa(n1,e1) + kappa(n2,e2)
/// whenever the sum point is also in the table.
std::vector<SubadditivityViolation> subadditivity_audit(const std::vector<KappaRecord>& records);

struct CrossingLemmaViolation {
  int n, e, kappa;
  int denominator;  // 64 or 29
};

/// Over exact records: 64 n^2 kappa >= e^3 when e > 4n and
/// 29 n^2 kappa >= e^3 when e > 7n.
std::vector<CrossingLemmaViolation> crossing_lemma_audit(const std::vector<KappaRecord>& records);

struct MonotonicityViolation {
  int n1, e1, kappa1;
  int n2, e2, kappa2;
};

/// Exact pairs with (n1 == n2, e1 < e2, kappa1 > kappa2) or
/// (e1 == e2, n1 < n2, kappa1 < kappa2).
std::vector<MonotonicityViolation> monotonicity_audit(const std::vector<KappaRecord>& records);

/// Pointwise kappa_first(n,e) <= kappa_second(n,e) at exact common points
/// (used with first = All).
std::vector<MonotonicityViolation> dominance_audit(const std::vector<KappaRecord>& first,
                                                   const std::vector<KappaRecord>& second);

enum class SideStatus { Verified, Violated, Skipped };

struct SandwichReport {
  Rational a;
  int n = 0;
  int e = 0;
  KappaRecord record;
  /// a^3 / 100 <= kappa / n, checked with the proven lower bound; Skipped
  /// when that bound is too weak and the value is not exact.
  SideStatus lower_side = SideStatus::Skipped;
  /// kappa / n <= 8 a^3, checked with the certified upper bound.
  SideStatus upper_side = SideStatus::Skipped;

  bool holds() const { return lower_side == SideStatus::Verified && upper_side == SideStatus::Verified; }
};

/// Throws PreconditionFailed unless a >= 4 and n >= 2a + 1.
SandwichReport sandwich_audit(const ClassSpec& spec, Rational a, int n, const HarnessOptions& options = {});

struct ConvexityPoint {
  Rational a;
  int kappa = 0;
};

struct ConvexityReport {
  Rational lambda;
  Rational lhs;  // kappa(a2 n) / n
  Rational rhs;  // lambda kappa(a1 n) / n + (1 - lambda) kappa(a3 n) / n
  bool holds = false;
};

/// Finite-n convexity at a1 <= a2 <= a3 (same n). Reported, not asserted.
ConvexityReport convexity_probe(int n, const ConvexityPoint& p1, const ConvexityPoint& p2, const ConvexityPoint& p3);

struct DEstimate {
  ClassSpec spec = ClassSpec::all();
  std::vector<std::pair<Rational, GammaPoint>> grid;
  Rational d_value;
  bool window_ok = false;
  bool exact = false;
  /// Always true: a finite-n stand-in for a limsup.
  bool finite_scale = true;
};

/// max over the grid of (kappa(n, ceil(a n)) / n) / a^3. Throws EmptyGrid.
DEstimate d_estimate(const ClassSpec& spec, const std::vector<std::pair<Rational, int>>& grid,
                     const HarnessOptions& options = {});

/// ceil(a n) for a >= 0.
int edge_target(Rational a, int n);

}  // namespace crossing
