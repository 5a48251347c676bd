#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "crossing/canonical.hpp"
#include "crossing/harness.hpp"
#include "crossing/io.hpp"
#include "crossing/pst_ops.hpp"
#include "crossing/solver.hpp"

using namespace crossing;

namespace {

// kappa without pruning: exact Cr of every enumerated graph, then the
// minimum over all rows with at least e edges.
std::map<int, int> naive_kappa_row(const ClassSpec& spec, int n) {
  const int top = *max_edges(spec, n);
  std::map<int, int> row_min;
  for (int e = 0; e <= top; ++e) {
    int best = 1 << 30;
    for (const Graph& g : enumerate_graphs(spec, n, e)) best = std::min(best, crossing_number(g).value);
    row_min[e] = best;
  }
  std::map<int, int> out;
  int suffix = 1 << 30;
  for (int e = top; e >= 0; --e) out[e] = suffix = std::min(suffix, row_min[e]);
  return out;
}

KappaRecord fake(int n, int e, int k, bool exact = true) {
  KappaRecord r;
  r.n = n;
  r.e = e;
  r.kappa = k;
  r.lower = exact ? k : 0;
  r.exact = exact;
  r.witness = Graph(n);
  return r;
}

void check_record(const KappaRecord& r) {
  EXPECT_TRUE(contains(r.spec, r.witness));
  EXPECT_EQ(r.witness.order(), r.n);
  EXPECT_GE(r.witness.size(), r.e);
  ASSERT_TRUE(r.certificate.has_value());
  EXPECT_TRUE(verify_certificate(*r.certificate));
  EXPECT_EQ(r.certificate->crossing_count(), r.kappa);
  EXPECT_EQ(r.certificate->base, r.witness);
  EXPECT_LE(r.lower, r.kappa);
}

}  // namespace

TEST(Kappa, Examples) {
  const auto k5 = kappa(ClassSpec::all(), 5, 10);
  EXPECT_EQ(k5.kappa, 1);
  EXPECT_TRUE(k5.exact);
  EXPECT_TRUE(isomorphic(k5.witness, Graph::complete(5)));
  for (int e = 0; e <= 6; ++e) EXPECT_EQ(kappa(ClassSpec::all(), 4, e).kappa, 0);
  const auto b = kappa(ClassSpec::bipartite(), 6, 9);
  EXPECT_EQ(enumerate_graphs(ClassSpec::bipartite(), 6, 9).size(), 1u);
  EXPECT_EQ(b.kappa, 1);
  EXPECT_TRUE(b.exact);
  EXPECT_TRUE(isomorphic(b.witness, Graph::complete_bipartite(3, 3)));
  EXPECT_THROW(kappa(ClassSpec::all(), 4, 7), ClassEmpty);
  EXPECT_THROW(kappa(ClassSpec::bipartite(), 5, 7), ClassEmpty);
  EXPECT_THROW(kappa(ClassSpec::all(), 9, 20), CeilingExceeded);
}

TEST(Kappa, CompleteRowAboveTheCeiling) {
  HarnessOptions o;
  o.node_budget = 2000;
  const auto r = kappa(ClassSpec::all(), 9, 36, o);
  EXPECT_TRUE(isomorphic(r.witness, Graph::complete(9)));
  EXPECT_LE(r.lower, 36);
  EXPECT_GE(r.kappa, 36);
  check_record(r);
}

TEST(Kappa, MatchesUnprunedOracle) {
  for (const ClassSpec& spec : {ClassSpec::all(), ClassSpec::bipartite(), ClassSpec::kt_free(3)}) {
    for (int n = 1; n <= 6; ++n) {
      const auto oracle = naive_kappa_row(spec, n);
      const auto row = kappa_row(spec, n, 0);
      ASSERT_EQ(row.size(), oracle.size());
      for (const auto& r : row) {
        EXPECT_TRUE(r.exact);
        EXPECT_EQ(r.kappa, oracle.at(r.e)) << spec.to_string() << " n=" << n << " e=" << r.e;
        check_record(r);
        EXPECT_EQ(kappa(spec, n, r.e).kappa, r.kappa);
      }
    }
  }
}

TEST(Kappa, TableAuditsAndDominance) {
  // Small budget: the densest 7-vertex rows come out inexact and are skipped
  // by the audits.
  HarnessOptions o;
  o.node_budget = 5000;
  const auto all = kappa_table(ClassSpec::all(), 7, o);
  const auto bip = kappa_table(ClassSpec::bipartite(), 7, o);
  for (const auto* table : {&all, &bip}) {
    EXPECT_TRUE(subadditivity_audit(*table).empty());
    EXPECT_TRUE(crossing_lemma_audit(*table).empty());
    EXPECT_TRUE(monotonicity_audit(*table).empty());
    for (const auto& r : *table) check_record(r);
  }
  EXPECT_TRUE(dominance_audit(all, bip).empty());
  int exact = 0;
  for (const auto& r : all) exact += r.exact;
  EXPECT_GE(exact, static_cast<int>(all.size()) - 2);
  // Every class contains the bipartite graphs.
  const auto tri = kappa_table(ClassSpec::kt_free(3), 6);
  EXPECT_TRUE(dominance_audit(all, tri).empty());
  EXPECT_TRUE(dominance_audit(tri, bip).empty());
}

TEST(Kappa, DeterministicAcrossWorkers) {
  HarnessOptions one, many;
  one.workers = 1;
  many.workers = 4;
  const auto a = kappa_row(ClassSpec::all(), 6, 0, one);
  const auto b = kappa_row(ClassSpec::all(), 6, 0, many);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].kappa, b[i].kappa);
    EXPECT_EQ(a[i].witness, b[i].witness);
    EXPECT_EQ(to_json(a[i]).dump(), to_json(b[i]).dump());
  }
}

TEST(Gamma, Series) {
  const auto s = gamma_series(ClassSpec::all(), Rational(1), {8, 4, 5, 6, 7});
  ASSERT_EQ(s.points.size(), 5u);
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    EXPECT_EQ(s.points[i].n, static_cast<int>(i) + 4);
    EXPECT_EQ(s.points[i].value, Rational(0));
    EXPECT_TRUE(s.points[i].exact);
  }
  const auto b = gamma_series(ClassSpec::bipartite(), Rational(3, 2), {6});
  EXPECT_EQ(b.points[0].e, 9);
  EXPECT_EQ(b.points[0].value, Rational(1, 6));
  EXPECT_EQ(edge_target(Rational(7, 3), 4), 10);
  EXPECT_EQ(edge_target(Rational(3), 7), 21);
}

TEST(Audits, Subadditivity) {
  EXPECT_TRUE(subadditivity_audit({fake(5, 10, 1), fake(10, 20, 2)}).empty());
  const auto v = subadditivity_audit({fake(5, 10, 1), fake(10, 20, 3)});
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kappa_sum_point, 3);
  EXPECT_TRUE(subadditivity_audit({fake(5, 10, 1)}).empty());
  EXPECT_TRUE(subadditivity_audit({fake(4, 6, 0), fake(8, 12, 0)}).empty());
  EXPECT_EQ(subadditivity_audit({fake(4, 6, 0), fake(8, 12, 1)}).size(), 1u);
  EXPECT_TRUE(subadditivity_audit({fake(4, 6, 0), fake(8, 12, 1, false)}).empty());
  // A planar 8-vertex graph with 12 edges: two disjoint K4.
  const Graph k4[] = {Graph::complete(4), Graph::complete(4)};
  EXPECT_EQ(crossing_number(disjoint_union(k4)).value, 0);
}

TEST(Audits, CrossingLemma) {
  EXPECT_TRUE(crossing_lemma_audit({fake(9, 36, 0)}).empty());
  EXPECT_TRUE(crossing_lemma_audit({fake(5, 10, 0)}).empty());
  // 41^3 / 6400 = 10.77: kappa 10 violates, 11 passes.
  EXPECT_EQ(crossing_lemma_audit({fake(10, 41, 10)}).size(), 1u);
  EXPECT_TRUE(crossing_lemma_audit({fake(10, 41, 11)}).empty());
  EXPECT_EQ(crossing_lemma_audit({fake(10, 41, 10, false)}).size(), 0u);
  // e > 7n triggers both forms.
  EXPECT_EQ(crossing_lemma_audit({fake(10, 71, 0)}).size(), 2u);
}

TEST(Audits, Sandwich) {
  HarnessOptions o;
  o.node_budget = 2000;
  const auto r = sandwich_audit(ClassSpec::all(), Rational(4), 9, o);
  EXPECT_EQ(r.e, 36);
  // The Euler bound alone gives 15 >= 0.64 * 9.
  EXPECT_EQ(r.lower_side, SideStatus::Verified);
  EXPECT_EQ(r.upper_side, SideStatus::Verified);
  EXPECT_TRUE(r.holds());
  EXPECT_THROW(sandwich_audit(ClassSpec::all(), Rational(4), 8, o), PreconditionFailed);
  EXPECT_THROW(sandwich_audit(ClassSpec::all(), Rational(3), 9, o), PreconditionFailed);
  // Bipartite, a = 4: n >= 9 but K_{n/2,n/2} has < 4n edges below n = 16.
  EXPECT_THROW(sandwich_audit(ClassSpec::bipartite(), Rational(4), 10, o), ClassEmpty);
}

TEST(Audits, Convexity) {
  const auto zero = convexity_probe(5, {Rational(1), 0}, {Rational(2), 0}, {Rational(3), 0});
  EXPECT_TRUE(zero.holds);
  const auto flat = convexity_probe(5, {Rational(2), 3}, {Rational(2), 3}, {Rational(2), 3});
  EXPECT_TRUE(flat.holds);
  EXPECT_EQ(flat.lhs, flat.rhs);
  // kappa(7,7) = 0, kappa(7,21) = 9, kappa(7,14) = 0.
  const auto k7 = convexity_probe(7, {Rational(1), 0}, {Rational(2), kappa(ClassSpec::all(), 7, 14).kappa},
                                  {Rational(3), 9});
  EXPECT_EQ(k7.lambda, Rational(1, 2));
  EXPECT_EQ(k7.rhs, Rational(9, 14));
  EXPECT_TRUE(k7.holds);
  const auto bad = convexity_probe(4, {Rational(1), 0}, {Rational(2), 5}, {Rational(3), 6});
  EXPECT_FALSE(bad.holds);
  EXPECT_THROW(convexity_probe(4, {Rational(3), 0}, {Rational(2), 0}, {Rational(1), 0}), std::invalid_argument);
}

TEST(Audits, DEstimate) {
  EXPECT_THROW(d_estimate(ClassSpec::all(), {}), EmptyGrid);
  const auto planar = d_estimate(ClassSpec::all(), {{Rational(1), 6}, {Rational(3, 2), 6}});
  EXPECT_EQ(planar.d_value, Rational(0));
  EXPECT_FALSE(planar.window_ok);
  EXPECT_TRUE(planar.finite_scale);
  const auto k6 = d_estimate(ClassSpec::all(), {{Rational(5, 2), 6}});
  // kappa(6,15) = 3: (3/6) / (125/8) = 4/125.
  EXPECT_EQ(k6.d_value, Rational(4, 125));
  EXPECT_TRUE(k6.window_ok);
  EXPECT_TRUE(k6.exact);
}

TEST(Io, CertificateRoundTrip) {
  const auto c = crossing_number(Graph::complete(6)).certificate;
  const Json j = to_json(c);
  const auto back = certificate_from_json(Json::parse(j.dump()));
  EXPECT_EQ(back.base, c.base);
  EXPECT_EQ(back.crossings, c.crossings);
  EXPECT_EQ(back.edge_orders, c.edge_orders);
  Json broken = j;
  broken["crossings"][0] = {0, 1};
  EXPECT_THROW(certificate_from_json(broken), FormatError);
  Json bad_graph = j;
  bad_graph["graph"]["graph6"] = "\x01";
  EXPECT_THROW(certificate_from_json(bad_graph), FormatError);
}

TEST(Io, KappaTablesRoundTrip) {
  const auto table = kappa_table(ClassSpec::intersection({ClassSpec::kt_free(4), ClassSpec::l_colorable(3)}), 5);
  const auto back = kappa_records_from_json(Json::parse(to_json(table).dump()));
  ASSERT_EQ(back.size(), table.size());
  for (std::size_t i = 0; i < table.size(); ++i) EXPECT_EQ(to_json(back[i]).dump(), to_json(table[i]).dump());

  std::stringstream csv;
  write_kappa_csv(csv, table, "seed 1\nhash abc");
  const std::string text = csv.str();
  EXPECT_EQ(text.rfind("# seed 1\n# hash abc\nclass,n,e,kappa,exact,witness_graph6\n", 0), 0u);
  const auto rows = read_kappa_csv(csv);
  ASSERT_EQ(rows.size(), table.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].spec, table[i].spec);
    EXPECT_EQ(rows[i].e, table[i].e);
    EXPECT_EQ(rows[i].kappa, table[i].kappa);
    EXPECT_EQ(rows[i].witness, table[i].witness);
  }
  std::stringstream bad("class,n,e,kappa,exact,witness_graph6\nAll,3,x,0,true,Bw\n");
  EXPECT_THROW(read_kappa_csv(bad), FormatError);
}
