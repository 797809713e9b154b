//
// gpnn-lab - Copyright 2026 The gpnn-lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "gpnn/harness.h"

#include <cstdlib>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "gpnn/generators.h"
#include "gpnn/graph.h"
#include "gpnn/io.h"
#include "gpnn/isomorphism.h"
#include "gpnn/wl.h"
#include "oracles.h"

namespace gpnn {
namespace {

Graph two_c3() { return disjoint_union(cycle_graph(3), cycle_graph(3)); }

TEST(GeneratorTest, Kinds) {
  const std::vector<double> six = {6};
  const Graph c6 = generate(GraphKind::kCycle, six, 0);
  EXPECT_EQ(c6.num_edges(), 6);
  for (Vertex v = 0; v < 6; ++v)
    EXPECT_EQ(c6.degree(v), 2);
  const std::vector<double> dc = {3, 2};
  EXPECT_EQ(generate(GraphKind::kDisjointCycles, dc, 0), two_c3());
  EXPECT_EQ(generate(GraphKind::kComplete, six, 0), complete_graph(6));
  EXPECT_EQ(generate(GraphKind::kPath, six, 0), path_graph(6));
  for (GraphKind k : {GraphKind::kCycle, GraphKind::kGnp, GraphKind::kShrikhande})
    EXPECT_EQ(parse_graph_kind(graph_kind_name(k)), k);
  EXPECT_FALSE(parse_graph_kind("petersen").has_value());
}

TEST(GeneratorTest, CycleEdgeOrder) {
  const std::vector<double> six = {6};
  const EdgeList e = generate_edge_list(GraphKind::kCycle, six, 0);
  EXPECT_EQ(serialize_edge_list(e.n, e.edges), "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
}

TEST(GeneratorTest, InfeasibleParameters) {
  const std::vector<double> odd = {5, 3};
  EXPECT_THROW(generate(GraphKind::kRandomRegular, odd, 0), std::invalid_argument);
  const std::vector<double> dense = {4, 4};
  EXPECT_THROW(generate(GraphKind::kRandomRegular, dense, 0), std::invalid_argument);
  const std::vector<double> bad_p = {5, 1.5};
  EXPECT_THROW(generate(GraphKind::kGnp, bad_p, 0), std::invalid_argument);
  const std::vector<double> frac = {5.5};
  EXPECT_THROW(generate(GraphKind::kCycle, frac, 0), std::invalid_argument);
  const std::vector<double> none;
  EXPECT_THROW(generate(GraphKind::kCycle, none, 0), std::invalid_argument);
}

TEST(GeneratorTest, StronglyRegularFixtures) {
  const Graph r = rook_graph_4x4();
  EXPECT_EQ(r.num_vertices(), 16);
  EXPECT_EQ(r.num_edges(), 48);
  EXPECT_TRUE(oracle::is_srg(r, 16, 6, 2, 2));
  EXPECT_TRUE(oracle::is_srg(shrikhande_graph(), 16, 6, 2, 2));
}

TEST(GeneratorTest, Determinism) {
  EXPECT_EQ(gnp(10, 0.3, 7), gnp(10, 0.3, 7));
  EXPECT_EQ(random_regular(12, 3, 7), random_regular(12, 3, 7));
  EXPECT_NE(gnp(30, 0.3, 7), gnp(30, 0.3, 8));
  EXPECT_EQ(gnp(10, 0.0, 1).num_edges(), 0);
  EXPECT_EQ(gnp(10, 1.0, 1).num_edges(), 45);
}

TEST(GeneratorTest, RandomRegularIsRegular) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = random_regular(14, 4, seed);
    for (Vertex v = 0; v < 14; ++v)
      EXPECT_EQ(g.degree(v), 4);
  }
}

TEST(GeneratorTest, GnpEdgeDensity) {
  const Graph g = gnp(400, 0.05, 3);
  const double expected = 0.05 * 400 * 399 / 2;
  EXPECT_NEAR(static_cast<double>(g.num_edges()), expected, 5 * std::sqrt(expected));
}

TEST(GeneratorTest, EnumerationCounts) {
  EXPECT_EQ(enumerate_all(1).size(), 1u);
  EXPECT_EQ(enumerate_all(2).size(), 2u);
  EXPECT_EQ(enumerate_all(3).size(), 4u);
  EXPECT_EQ(enumerate_all(4).size(), 11u);
  EXPECT_EQ(oracle::count_classes_brute_force(4), 11);
  EXPECT_EQ(oracle::count_classes_brute_force(5), 34);
  EXPECT_EQ(enumerate_all(5).size(), 34u);
  EXPECT_THROW(enumerate_all(8), std::invalid_argument);
  EXPECT_THROW(enumerate_all(0), std::invalid_argument);
}

TEST(GeneratorTest, FourVertexClassesByDegreeSequence) {
  // Every class on 4 vertices has its own degree sequence.
  std::set<std::vector<Vertex>> seqs;
  for (const Graph &g : enumerate_all(4)) {
    std::vector<Vertex> d;
    for (Vertex v = 0; v < 4; ++v)
      d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    seqs.insert(d);
  }
  EXPECT_EQ(seqs.size(), 11u);
}

TEST(SuiteTest, NamesMustBeUnique) {
  PairSuite s;
  s.add("a", cycle_graph(3), cycle_graph(3));
  s.add("a", cycle_graph(4), cycle_graph(4));
  EXPECT_THROW(s.validate(), std::invalid_argument);
  EXPECT_NO_THROW(named_hard_pairs().validate());
}

TEST(SuiteTest, SixCycleMatrix) {
  PairSuite s;
  s.add("c6_2c3", cycle_graph(6), two_c3());
  const HierarchyReport r = run_suite(s, {});
  ASSERT_EQ(r.rows.size(), 1u);
  const auto &row = r.rows[0];
  EXPECT_EQ(row.wl1, Outcome::kEquivalent);
  EXPECT_EQ(row.fwl2, Outcome::kDistinguished);
  EXPECT_EQ(row.gpnn_outcome(Scheme::kTriangle, Variant::kStar), Outcome::kDistinguished);
  EXPECT_EQ(row.gpnn_outcome(Scheme::kTrivial, Variant::kStar), Outcome::kEquivalent);
  EXPECT_EQ(row.lambda_eq(Scheme::kTriangle), false);
  EXPECT_EQ(row.gpnn.size(), 18u);
  EXPECT_TRUE(r.violations.empty());
}

TEST(SuiteTest, PermutedPairsAreEquivalentEverywhere) {
  const HierarchyReport r = run_suite(permuted_pairs(10, 4), {});
  EXPECT_TRUE(r.violations.empty());
  for (const auto &row : r.rows) {
    EXPECT_EQ(row.wl1, Outcome::kEquivalent);
    EXPECT_EQ(row.fwl2, Outcome::kEquivalent);
    for (const auto &c : row.gpnn)
      EXPECT_EQ(c.outcome, Outcome::kEquivalent);
  }
}

TEST(SuiteTest, StronglyRegularPairIsEquivalentEverywhere) {
  PairSuite s;
  s.add("srg", shrikhande_graph(), rook_graph_4x4());
  const HierarchyReport r = run_suite(s, {});
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.rows[0].fwl2, Outcome::kEquivalent);
  for (const auto &c : r.rows[0].gpnn)
    EXPECT_EQ(c.outcome, Outcome::kEquivalent);
}

TEST(SuiteTest, CheckPairFlagsBreaches) {
  PairVerdicts row;
  row.name = "fake";
  row.wl1 = Outcome::kDistinguished;
  row.fwl2 = Outcome::kEquivalent;
  row.lambda_equivalent = {{Scheme::kTrivial, true}};
  row.gpnn = {{Scheme::kTrivial, Variant::kStar, Outcome::kEquivalent},
              {Scheme::kTrivial, Variant::kDiamond, Outcome::kDistinguished},
              {Scheme::kTrivial, Variant::kDagger, Outcome::kDistinguished}};
  std::vector<Violation> v;
  check_pair(row, v);
  std::set<std::string> checks;
  for (const auto &x : v)
    checks.insert(x.check);
  EXPECT_TRUE(checks.count("trivial-star-equals-1wl"));
  EXPECT_TRUE(checks.count("dagger-below-2fwl"));
  EXPECT_TRUE(checks.count("lower-bound"));
  EXPECT_FALSE(checks.count("variant-monotonicity"));
}

TEST(SuiteTest, ReportIsDeterministicAcrossThreadCounts) {
  PairSuite s = named_hard_pairs();
  s.append(random_regular_pairs(12, 5));
  SuiteOptions one;
  one.threads = 1;
  SuiteOptions many;
  many.threads = 4;
  EXPECT_EQ(report_to_json(run_suite(s, one)).dump(), report_to_json(run_suite(s, many)).dump());
}

TEST(SuiteTest, CorpusFiltersAreConsistent) {
  const PairSuite all = corpus_pairs(5, false);
  const PairSuite same = corpus_pairs(5, true);
  EXPECT_GT(all.pairs.size(), same.pairs.size());
  for (const auto &p : corpus_wl1_equivalent_pairs(6).pairs) {
    EXPECT_TRUE(oracle::wl1_equivalent(p.first, p.second));
    EXPECT_FALSE(are_isomorphic(p.first, p.second).isomorphic);
  }
}

TEST(SearchTest, TriangleCounterexampleContainsSixCycle) {
  for (const char *name : {"pi-not-ii", "ii-not-gi", "wl1eq-triangle-distinct",
                           "wl1eq-fwl2-distinct"})
    EXPECT_EQ(predicate_name(*parse_predicate(name)), name);
  const auto found = search_counterexamples(CounterexamplePredicate::kWl1EqTriangleDistinct, 6,
                                            Scheme::kDegree);
  bool has = false;
  for (const auto &[g, h] : found)
    has |= (are_isomorphic(g, cycle_graph(6)).isomorphic &&
            are_isomorphic(h, two_c3()).isomorphic) ||
           (are_isomorphic(h, cycle_graph(6)).isomorphic &&
            are_isomorphic(g, two_c3()).isomorphic);
  EXPECT_TRUE(has);
  for (const auto &[g, h] :
       search_counterexamples(CounterexamplePredicate::kWl1EqFwl2Distinct, 6, Scheme::kDegree)) {
    EXPECT_TRUE(oracle::wl1_equivalent(g, h));
    EXPECT_FALSE(oracle::fwl2_equivalent(g, h));
  }
}

TEST(SearchTest, ContainmentsSmall) {
  for (Scheme s : {Scheme::kDegree, Scheme::kCore}) {
    const ContainmentCheck c = check_isomorphism_containments(5, s, 1);
    EXPECT_EQ(c.violations, 0);
    EXPECT_GT(c.pairs, 0);
    EXPECT_LE(c.gi, c.ii);
    EXPECT_LE(c.ii, c.pi);
  }
}

TEST(HarnessTest, ThreadsFromEnvironment) {
  EXPECT_EQ(harness_threads(3), 3);
  setenv("GPNN_THREADS", "2", 1);
  EXPECT_EQ(harness_threads(0), 2);
  unsetenv("GPNN_THREADS");
  EXPECT_GE(harness_threads(0), 1);
}

}  // namespace
}  // namespace gpnn
