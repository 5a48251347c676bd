#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "crossing/book_drawing.hpp"
#include "crossing/constructions.hpp"
#include "crossing/solver.hpp"

using namespace crossing;

namespace {

DrawingCertificate optimal(const Graph& g) { return crossing_number(g).certificate; }

DrawingCertificate two_crossing_edges() { return *make_certificate(Graph(4, {{0, 2}, {1, 3}}), {{0, 1}}, {{0}, {0}}); }

Graph random_graph(std::mt19937_64& rng, int n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

// E[X] over all 2^n vertex subsets, weighted by p^|U| (1-p)^(n-|U|).
ExactExpectations subset_expectations(const DrawingCertificate& c, Rational p) {
  const Graph& g = c.base;
  ExactExpectations out{0, 0, 0};
  for (unsigned mask = 0; mask < (1u << g.order()); ++mask) {
    Rational w(1);
    int nu = 0;
    for (int v = 0; v < g.order(); ++v) {
      const bool in = (mask >> v) & 1;
      w *= in ? p : Rational(1) - p;
      nu += in;
    }
    auto kept = [mask](const Edge& e) { return ((mask >> e.u) & 1) && ((mask >> e.v) & 1); };
    int eta = 0, xi = 0;
    for (const Edge& e : g.edges()) eta += kept(e);
    for (const auto& [a, b] : c.crossings) xi += kept(g.edge(a)) && kept(g.edge(b));
    out.nu += w * nu;
    out.eta += w * eta;
    out.xi += w * xi;
  }
  return out;
}

std::int64_t binomial2_sum(const Graph& g) {
  std::int64_t s = 0;
  for (int d : g.degrees()) s += static_cast<std::int64_t>(d) * (d - 1) / 2;
  return s;
}

}  // namespace

TEST(SampleInduced, FullProbabilityIsExact) {
  const auto c = optimal(Graph::complete(5));
  const auto s = sample_induced(c, 1.0, 50, 7);
  EXPECT_EQ(s.nu_mean, 5);
  EXPECT_EQ(s.eta_mean, 10);
  EXPECT_EQ(s.xi_mean, 1);
  EXPECT_EQ(s.nu_var, 0);
  EXPECT_EQ(s.eta_var, 0);
  EXPECT_EQ(s.xi_var, 0);
  EXPECT_EQ(s.seed, 7u);
}

TEST(SampleInduced, RejectsBadProbability) {
  const auto c = optimal(Graph::complete(4));
  EXPECT_THROW(sample_induced(c, 0.0, 10, 1), InvalidProbability);
  EXPECT_THROW(sample_induced(c, 1.5, 10, 1), InvalidProbability);
  EXPECT_THROW(sample_induced(c, std::nan(""), 10, 1), InvalidProbability);
  EXPECT_THROW(exact_expectations(c, Rational(0)), InvalidProbability);
}

TEST(SampleInduced, MonteCarloMatchesExpectations) {
  const double se_limit = 4.0;
  {
    const auto c = optimal(Graph::complete(6));
    ASSERT_EQ(c.crossing_count(), 3);
    const auto s = sample_induced(c, 0.5, 100000, 2024);
    EXPECT_LE(std::abs(s.xi_mean - 0.1875), se_limit * std::sqrt(s.xi_var / s.trials));
  }
  {
    const auto c = optimal(Graph::complete(5));
    const auto s = sample_induced(c, 0.5, 100000, 2025);
    EXPECT_LE(std::abs(s.nu_mean - 2.5), se_limit * std::sqrt(s.nu_var / s.trials));
    EXPECT_LE(std::abs(s.eta_mean - 2.5), se_limit * std::sqrt(s.eta_var / s.trials));
    // Var[nu] = np(1-p) = 1.25.
    EXPECT_NEAR(s.nu_var, 1.25, 0.05);
  }
}

TEST(SampleInduced, ParallelEqualsSerial) {
  const auto c = optimal(Graph::petersen());
  for (int workers : {1, 2, 3, 8}) {
    const auto a = sample_induced(c, 0.37, 5000, 99, workers);
    const auto b = sample_induced_serial(c, 0.37, 5000, 99);
    EXPECT_EQ(a.nu_mean, b.nu_mean);
    EXPECT_EQ(a.eta_mean, b.eta_mean);
    EXPECT_EQ(a.xi_mean, b.xi_mean);
    EXPECT_EQ(a.nu_var, b.nu_var);
    EXPECT_EQ(a.eta_var, b.eta_var);
    EXPECT_EQ(a.xi_var, b.xi_var);
  }
  EXPECT_NE(sample_induced(c, 0.37, 5000, 99).xi_mean, sample_induced(c, 0.37, 5000, 100).xi_mean);
}

TEST(ExactExpectations, MatchSubsetEnumeration) {
  for (const Graph& g : {Graph::complete(5), Graph::complete(6), Graph::complete_bipartite(3, 4), Graph::petersen()}) {
    const auto c = optimal(g);
    for (Rational p : {Rational(1, 2), Rational(1, 3), Rational(3, 7), Rational(1)}) {
      const auto formula = exact_expectations(c, p);
      const auto oracle = subset_expectations(c, p);
      EXPECT_EQ(formula.nu, oracle.nu);
      EXPECT_EQ(formula.eta, oracle.eta);
      EXPECT_EQ(formula.xi, oracle.xi);
      EXPECT_EQ(formula.xi, p * p * p * p * c.crossing_count());
    }
  }
}

TEST(Chebyshev, Bounds) {
  // Midrange point: eps = 0.1, slack = eps / 10^4, p e = A n with A = 2.5e12.
  const double eps = 0.1;
  const auto [nu, eta] = chebyshev_bounds(1e13, 1e26, 0.25, eps / 1e4);
  EXPECT_LT(nu, eps / 10);
  EXPECT_LT(eta, eps / 10);
  EXPECT_NEAR(nu, 0.004, 1e-12);
  EXPECT_NEAR(eta, 0.008, 1e-12);

  const auto [nu1, eta1] = chebyshev_bounds(100, 1000, 1.0, 0.5);
  EXPECT_GT(nu1, 0);
  EXPECT_TRUE(std::isfinite(nu1));
  EXPECT_DOUBLE_EQ(nu1, 1.0 / (0.25 * 100));
  EXPECT_DOUBLE_EQ(eta1, 2.0 * 100 / (0.25 * 1000));

  double last_nu = nu1, last_eta = eta1;
  for (double slack : {1.0, 10.0, 1e3, 1e6}) {
    const auto [a, b] = chebyshev_bounds(100, 1000, 1.0, slack);
    EXPECT_LT(a, last_nu);
    EXPECT_LT(b, last_eta);
    last_nu = a;
    last_eta = b;
  }
  EXPECT_LT(last_nu, 1e-12);
  EXPECT_THROW(chebyshev_bounds(10, 10, 0.5, 0), std::invalid_argument);
}

TEST(SplitToMaxDegree, Examples) {
  const auto k2 = optimal(Graph::complete(2));
  EXPECT_EQ(split_to_max_degree(k2, 1).base, Graph::complete(2));

  const auto star = split_to_max_degree(optimal(Graph::star(5)), 2);
  EXPECT_EQ(star.base.max_degree(), 2);
  EXPECT_EQ(star.base.size(), 5);
  EXPECT_EQ(star.base.order(), 6 + 2);
  std::vector<int> parts;
  for (int v : {0, 6, 7}) parts.push_back(star.base.degree(v));
  std::sort(parts.begin(), parts.end());
  EXPECT_EQ(parts, (std::vector<int>{1, 2, 2}));

  const auto k6 = split_to_max_degree(optimal(Graph::complete(6)), 3);
  EXPECT_LE(k6.base.max_degree(), 3);
  EXPECT_EQ(k6.base.size(), 15);
  EXPECT_EQ(k6.crossing_count(), 3);
  EXPECT_TRUE(verify_certificate(k6));
}

TEST(SplitToMaxDegree, RandomCertificates) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(rng, 4 + static_cast<int>(rng() % 7), 0.5);
    const auto c = book_drawing(g, {.restarts = 2, .seed = static_cast<std::uint64_t>(trial)});
    const int t = 1 + static_cast<int>(rng() % 4);
    const auto s = split_to_max_degree(c, t);
    ASSERT_TRUE(verify_certificate(s));
    EXPECT_LE(s.base.max_degree(), t);
    EXPECT_EQ(s.base.size(), g.size());
    EXPECT_EQ(s.crossing_count(), c.crossing_count());
    int extra = 0;
    for (int d : g.degrees()) extra += d / t;
    EXPECT_GE(s.base.order(), g.order());
    EXPECT_LE(s.base.order(), g.order() + extra);
    // Each new vertex maps back to an original one; edges map onto edges.
    std::vector<Vertex> origin(s.base.order(), -1);
    for (Vertex v = 0; v < g.order(); ++v) origin[v] = v;
    for (int e = 0; e < s.base.size(); ++e) {
      const Edge& x = s.base.edge(e);
      if (x.u < g.order() && x.v < g.order()) EXPECT_TRUE(g.adjacent(x.u, x.v));
    }
  }
}

TEST(BlowUp, TwoCrossingEdges) {
  const auto r = blow_up(two_crossing_edges(), {1, 2, 1});
  EXPECT_EQ(r.certificate.base.order(), 8);
  EXPECT_EQ(r.certificate.base.size(), 8);
  EXPECT_EQ(r.bound, 16);
  EXPECT_LE(r.counted, 16);
  EXPECT_EQ(r.counted, r.certificate.crossing_count());
  EXPECT_TRUE(verify_certificate(r.certificate));
}

TEST(BlowUp, IdentityParameters) {
  for (const Graph& g : {Graph::complete(5), Graph::petersen(), Graph::complete_bipartite(3, 4)}) {
    const auto c = optimal(g);
    const auto r = blow_up(c, {1, 1, 1});
    EXPECT_EQ(r.certificate.base, g);
    EXPECT_EQ(r.counted, c.crossing_count());
    EXPECT_EQ(r.bound, c.crossing_count() + binomial2_sum(g));
    EXPECT_TRUE(verify_certificate(r.certificate));
  }
}

TEST(BlowUp, K5) {
  const auto r = blow_up(optimal(Graph::complete(5)), {1, 2, 3});
  EXPECT_EQ(r.certificate.base.order(), 30);
  EXPECT_EQ(r.certificate.base.size(), 120);
  EXPECT_EQ(binomial2_sum(Graph::complete(5)), 30);
  EXPECT_EQ(r.bound, 1488);
  EXPECT_LE(r.counted, 1488);
  EXPECT_TRUE(verify_certificate(r.certificate));
}

TEST(BlowUp, CloneStructure) {
  const Graph g = Graph::petersen();
  const int L = 2, K = 2;
  const auto r = blow_up(optimal(g), {1, L, K});
  const Graph& b = r.certificate.base;
  for (int copy = 0; copy < K; ++copy)
    for (const Edge& e : g.edges())
      for (int a = 0; a < L; ++a)
        for (int c = 0; c < L; ++c)
          EXPECT_TRUE(b.adjacent(copy * L * 10 + e.u * L + a, copy * L * 10 + e.v * L + c));
  EXPECT_EQ(b.size(), K * L * L * g.size());
  EXPECT_EQ(static_cast<int>(b.components().size()), K);
}

TEST(BlowUp, RandomCertificatesStayWithinBound) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(rng, 3 + static_cast<int>(rng() % 6), 0.5);
    const auto c = split_to_max_degree(book_drawing(g, {.restarts = 2, .seed = static_cast<std::uint64_t>(trial)}), 1 + static_cast<int>(rng() % 4));
    for (int L : {1, 2}) {
      const int K = 1 + static_cast<int>(rng() % 2);
      const auto r = blow_up(c, {1, L, K});
      ASSERT_TRUE(verify_certificate(r.certificate)) << g.to_string() << " L=" << L;
      EXPECT_EQ(r.certificate.base.order(), K * L * c.base.order());
      EXPECT_EQ(r.certificate.base.size(), K * L * L * c.base.size());
      EXPECT_LE(r.counted, r.bound) << g.to_string() << " L=" << L;
    }
  }
}

TEST(BlowUp, ThreeClonesWithMinimumDegreeTwo) {
  for (const Graph& g : {Graph::cycle(5), Graph::complete(5), Graph::petersen(), Graph::complete_bipartite(3, 3)}) {
    const auto r = blow_up(optimal(g), {1, 3, 1});
    EXPECT_TRUE(verify_certificate(r.certificate));
    EXPECT_LE(r.counted, r.bound);
  }
}

TEST(BlowUp, ThreeClonesOfAMatchingExceedTheBound) {
  // Each edge becomes K_{3,3}, which needs a crossing of its own while the
  // bound allows only the 81 grid crossings.
  const auto r = blow_up(two_crossing_edges(), {1, 3, 1});
  EXPECT_TRUE(verify_certificate(r.certificate));
  EXPECT_EQ(r.bound, 81);
  EXPECT_GT(r.counted, r.bound);
}

TEST(BlowUp, SolverAgreesOnSmallBlowUps) {
  const auto r = blow_up(optimal(Graph::cycle(3)), {1, 2, 1});
  const auto cn = crossing_number(r.certificate.base, 2'000'000);
  EXPECT_LE(cn.value, r.counted);
  const auto s = blow_up(two_crossing_edges(), {1, 2, 1});
  EXPECT_LE(crossing_number(s.certificate.base, 2'000'000).value, s.counted);
}
