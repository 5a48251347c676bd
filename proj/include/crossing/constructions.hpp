#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "crossing/certificate.hpp"

namespace crossing {

class InvalidProbability : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Random induced subgraphs of a drawn graph: nu = kept vertices, eta = kept
/// edges, xi = certificate crossings whose four endpoints are all kept.
struct SampleStats {
  double p = 1.0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  double nu_mean = 0, eta_mean = 0, xi_mean = 0;
  /// Unbiased sample variances (0 for a single trial).
  double nu_var = 0, eta_var = 0, xi_var = 0;
};

/// Trial t draws from mt19937_64 seeded with splitmix64(splitmix64(seed) + t), so the
/// result depends only on (certificate, p, trials, seed). Sums are exact
/// integers; `workers` (0 = all) does not change the output.
SampleStats sample_induced(const DrawingCertificate& c, double p, std::int64_t trials, std::uint64_t seed,
                           int workers = 0);
/// Single-threaded reference for sample_induced.
SampleStats sample_induced_serial(const DrawingCertificate& c, double p, std::int64_t trials, std::uint64_t seed);

using Rational = boost::rational<std::int64_t>;

struct ExactExpectations {
  Rational nu, eta, xi;
};

/// E[nu], E[eta], E[xi] summed over vertices, edges and crossings.
ExactExpectations exact_expectations(const DrawingCertificate& c, Rational p);

/// Chebyshev tail bounds for |nu - pn| > slack*pn and |eta - p^2 e| > slack*p^2 e
/// using Var[nu] <= pn and Var[eta] <= 2p^3 en. Not clamped to 1.
std::pair<double, double> chebyshev_bounds(double n, double e, double p, double slack);

/// Splits every vertex of degree d > t into floor(d/t) vertices of degree t
/// and one of degree d mod t (if nonzero), along contiguous blocks of its
/// rotation, so the crossings carry over unchanged. The vertex keeps the
/// first block; the others are appended in vertex order.
DrawingCertificate split_to_max_degree(const DrawingCertificate& c, int t);

struct BlowupParams {
  int degree_threshold = 1;
  int L = 1;
  int K = 1;
};

struct BlowupResult {
  DrawingCertificate certificate;
  std::int64_t bound = 0;
  std::int64_t counted = 0;
};

/// K disjoint copies of the graph with every vertex replaced by L
/// independent clones (vertex copy*L*n + v*L + a). Each edge becomes a
/// ribbon of L^2 parallel edges following the original route; two ribbons
/// meet in an L^4 grid at each original crossing. bound is
/// K L^4 (X + sum_v C(d(v), 2)) with X the input crossing count.
///
/// degree_threshold is not applied here; see split_to_max_degree.
BlowupResult blow_up(const DrawingCertificate& c, const BlowupParams& params);

}  // namespace crossing
