#include <gtest/gtest.h>

#include "kpack/audit.hpp"
#include "kpack/fixtures.hpp"
#include "support.hpp"

using namespace kpack;
using kpack::testing::naive_optimal_packing;
using kpack::testing::random_graph;

namespace {

RunRequest req(Algorithm a, int k, TspSolverKind tsp = TspSolverKind::exact) {
  RunRequest r;
  r.algorithm = a;
  r.k = k;
  r.tsp = tsp;
  return r;
}

}  // namespace

TEST(AlgorithmNames, RoundTrip) {
  for (Algorithm a : all_algorithms()) EXPECT_EQ(parse_algorithm(to_string(a)), a);
  EXPECT_EQ(to_string(Algorithm::kpp_combined), "kpp-combined");
  EXPECT_EQ(to_string(Algorithm::cp911), "3cp911");
  EXPECT_THROW(parse_algorithm("alg9"), Error);
}

TEST(GuaranteedRatio, MetricValues) {
  auto g = random_graph(12, WeightClass::metric, 1);
  EXPECT_EQ(*guaranteed_ratio(g, req(Algorithm::alg1, 7)), (Ratio(7, 8) - Ratio(1, 56)) * Ratio(6, 7));
  EXPECT_EQ(*guaranteed_ratio(g, req(Algorithm::alg2, 6)), Ratio(91, 120));
  EXPECT_EQ(*guaranteed_ratio(g, req(Algorithm::alg3, 5)), Ratio(7, 10));
  EXPECT_EQ(*guaranteed_ratio(g, req(Algorithm::alg4, 4)), Ratio(21, 32));
  EXPECT_EQ(*guaranteed_ratio(g, req(Algorithm::kpp_combined, 6)), Ratio(175, 228));
  EXPECT_EQ(*guaranteed_ratio(g, req(Algorithm::alg6, 4)), Ratio(3, 4));
  EXPECT_EQ(*guaranteed_ratio(g, req(Algorithm::alg7, 4)), Ratio(5, 6));
  EXPECT_EQ(*guaranteed_ratio(g, req(Algorithm::alg8, 4)), Ratio(14, 17));
  EXPECT_FALSE(guaranteed_ratio(g, req(Algorithm::alg5, 4)));
  EXPECT_FALSE(guaranteed_ratio(g, req(Algorithm::kpp_combined, 4)));
  EXPECT_FALSE(guaranteed_ratio(g, req(Algorithm::alg1, 4, TspSolverKind::greedy)));
}

TEST(GuaranteedRatio, ClassDependent) {
  auto general = kpack::testing::graph_from(8, {{0, 1, 40}}, 1);
  EXPECT_FALSE(guaranteed_ratio(general, req(Algorithm::alg3, 3)));
  EXPECT_FALSE(guaranteed_ratio(general, req(Algorithm::alg7, 4)));
  EXPECT_EQ(*guaranteed_ratio(general, req(Algorithm::general4pp, 4)), Ratio(3, 4));
  auto one_two = random_graph(12, WeightClass::one_two, 2);
  EXPECT_EQ(*guaranteed_ratio(one_two, req(Algorithm::alg7, 4)), Ratio(7, 8));
  EXPECT_EQ(*guaranteed_ratio(one_two, req(Algorithm::cp911, 3)), Ratio(9, 11));
  EXPECT_EQ(*guaranteed_ratio(one_two, req(Algorithm::reduce12, 3)), Ratio(1));
  EXPECT_FALSE(guaranteed_ratio(general, req(Algorithm::cp911, 3)));
}

TEST(MakeAudit, Relations) {
  EXPECT_TRUE(make_audit("a", 3, 2).holds);
  EXPECT_FALSE(make_audit("a", 2, 3).holds);
  EXPECT_TRUE(make_audit("a", 2, 2, "==").holds);
  EXPECT_FALSE(make_audit("a", 3, 2, "==").holds);
}

TEST(FormatRatio, Text) {
  EXPECT_EQ(format_ratio(Ratio(7, 10)), "7/10");
  EXPECT_EQ(format_ratio(Ratio(4, 2)), "2/1");
  EXPECT_DOUBLE_EQ(to_double(Ratio(3, 4)), 0.75);
}

TEST(AuditInstance, RatioAgainstNaiveOptimum) {
  auto g = random_graph(8, WeightClass::metric, 77);
  auto reports = audit_instance(g, {req(Algorithm::alg7, 4), req(Algorithm::alg8, 4), req(Algorithm::alg2, 4)},
                                "r77");
  ASSERT_EQ(reports.size(), 3u);
  const Weight cyc = naive_optimal_packing(g, 4, true);
  const Weight pth = naive_optimal_packing(g, 4, false);
  EXPECT_EQ(reports[0].oracle_weight, cyc);
  EXPECT_EQ(reports[1].oracle_weight, pth);
  EXPECT_EQ(reports[0].ratio, Ratio(reports[0].algorithm_weight, cyc));
  for (const auto& r : reports) {
    EXPECT_TRUE(r.all_hold()) << r.algorithm;
    EXPECT_EQ(r.instance_id, "r77");
    bool has_lb1 = false;
    for (const auto& a : r.audits) has_lb1 |= a.name == "lemma_lb1" || a.name == "tsp_ge_opt_kpp";
    EXPECT_TRUE(has_lb1);
  }
}

TEST(AuditInstance, EveryAlgorithmOnSmallInstances) {
  struct Case {
    Algorithm a;
    int k;
    int n;
    WeightClass cls;
  };
  const Case cases[] = {
      {Algorithm::alg1, 3, 9, WeightClass::metric},     {Algorithm::alg2, 4, 8, WeightClass::metric},
      {Algorithm::alg3, 5, 10, WeightClass::metric},    {Algorithm::alg4, 3, 9, WeightClass::metric},
      {Algorithm::alg5, 4, 8, WeightClass::metric},     {Algorithm::kpp_combined, 6, 12, WeightClass::metric},
      {Algorithm::alg6, 4, 12, WeightClass::general},   {Algorithm::alg7, 4, 12, WeightClass::one_two},
      {Algorithm::alg8, 4, 12, WeightClass::metric},    {Algorithm::general4pp, 4, 8, WeightClass::zero_one},
      {Algorithm::reduce12, 3, 9, WeightClass::one_two}, {Algorithm::cp911, 3, 12, WeightClass::one_two},
  };
  for (const auto& c : cases) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      auto g = random_graph(c.n, c.cls, seed);
      auto reports = audit_instance(g, {req(c.a, c.k)}, "x");
      ASSERT_EQ(reports.size(), 1u);
      const auto& r = reports[0];
      for (const auto& a : r.audits) EXPECT_TRUE(a.holds) << to_string(c.a) << " " << a.name;
      if (r.guaranteed) EXPECT_GE(r.ratio, *r.guaranteed) << to_string(c.a);
    }
  }
}

TEST(AuditInstance, KnownOptimumSkipsOracle) {
  const auto f = build_fixture(FixtureId::fig2_5cp);
  AuditOptions opt;
  opt.known_kind = PackingKind::cycle;
  opt.known_k = 5;
  opt.known_optimum = 50;
  auto reports = audit_instance(f.graph, {fixture_request(f)}, "fig2", opt);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_EQ(reports[0].ratio, Ratio(7, 10));
  EXPECT_TRUE(reports[0].all_hold());
  EXPECT_THROW(audit_instance(f.graph, {fixture_request(f)}, "fig2"), Error);
}

TEST(RunAlgorithm, RequiresKFour) {
  auto g = random_graph(12, WeightClass::metric, 1);
  EXPECT_THROW(run_algorithm(g, req(Algorithm::alg7, 3)), Error);
  EXPECT_THROW(run_algorithm(g, req(Algorithm::alg8, 6)), Error);
}

TEST(RunAlgorithm, MetricAuditsSkippedOnGeneralInput) {
  kpack::testing::CapturedWarnings w;
  auto g = kpack::testing::graph_from(9, {{0, 1, 40}}, 1);
  auto run = run_algorithm(g, req(Algorithm::alg3, 3));
  for (const auto& a : run.audits) EXPECT_EQ(a.name.rfind("lemma_lb4", 0), std::string::npos);
  EXPECT_EQ(w.messages.size(), 1u);
}
