#include <gtest/gtest.h>

#include "kpack/matching.hpp"
#include "kpack/tsp.hpp"
#include "support.hpp"

using namespace kpack;
using kpack::testing::graph_from;
using kpack::testing::random_graph;

TEST(ExactTsp, FourVerticesTwoHeavyEdges) {
  // a-b and c-d weigh 10, everything else 1. The three distinct 4-cycles weigh
  // 10+10+1+1, 10+1+10+1 ... only tours using both heavy edges reach 22.
  auto g = graph_from(4, {{0, 1, 10}, {2, 3, 10}}, 1);
  const Weight tours[] = {g(0, 1) + g(1, 2) + g(2, 3) + g(3, 0), g(0, 1) + g(1, 3) + g(3, 2) + g(2, 0),
                          g(0, 2) + g(2, 1) + g(1, 3) + g(3, 0)};
  const Weight best = *std::max_element(std::begin(tours), std::end(tours));
  EXPECT_EQ(best, 22);
  EXPECT_EQ(tour_weight(g, exact_max_tsp(g)), best);
}

TEST(ExactTsp, Triangle) {
  auto g = graph_from(3, {{0, 1, 4}, {0, 2, 5}, {1, 2, 6}});
  EXPECT_EQ(tour_weight(g, exact_max_tsp(g)), 15);
}

TEST(ExactTsp, EqualWeights) {
  auto g = kpack::testing::uniform_graph(9, 3);
  EXPECT_EQ(tour_weight(g, exact_max_tsp(g)), 27);
}

TEST(ExactTsp, CapAndSize) {
  EXPECT_THROW(exact_max_tsp(WeightedCompleteGraph(19)), Error);
  EXPECT_THROW(exact_max_tsp(WeightedCompleteGraph(10), 9), Error);
  EXPECT_THROW(exact_max_tsp(WeightedCompleteGraph(2)), Error);
}

TEST(ExactTsp, MatchesPermutationEnumeration) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 3 + static_cast<int>(seed % 6);
    auto g = random_graph(n, seed % 2 ? WeightClass::general : WeightClass::metric, seed);
    auto h = exact_max_tsp(g);
    EXPECT_FALSE(validate_tour(g, h).has_value());
    EXPECT_EQ(tour_weight(g, h), kpack::testing::naive_max_tour(g)) << "seed " << seed;
  }
}

TEST(HeuristicTsp, ValidAndDominated) {
  auto tri = graph_from(3, {{0, 1, 1}, {0, 2, 2}, {1, 2, 3}});
  EXPECT_EQ(tour_weight(tri, heuristic_max_tsp(tri)), 6);
  auto flat = kpack::testing::uniform_graph(7, 2);
  EXPECT_EQ(tour_weight(flat, heuristic_max_tsp(flat)), 14);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = random_graph(10, WeightClass::metric, seed);
    auto h = heuristic_max_tsp(g);
    EXPECT_FALSE(validate_tour(g, h).has_value());
    EXPECT_LE(tour_weight(g, h), tour_weight(g, exact_max_tsp(g)));
    EXPECT_EQ(h.order, heuristic_max_tsp(g).order);
  }
}

TEST(TspSolverKind, Parse) {
  EXPECT_EQ(parse_tsp_solver("exact"), TspSolverKind::exact);
  EXPECT_EQ(parse_tsp_solver("greedy"), TspSolverKind::greedy);
  EXPECT_THROW(parse_tsp_solver("christofides"), Error);
}

TEST(LemmaLb1, ExactTourDominatesScaledOptimalCyclePacking) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    auto g = random_graph(8, WeightClass::metric, 40 + seed);
    const Weight h = tour_weight(g, exact_max_tsp(g));
    for (int k : {4, 8}) {
      const Weight opt = kpack::testing::naive_optimal_packing(g, k, true);
      // h >= (1 - 1/(2k)) opt
      EXPECT_GE(2 * k * h, (2 * k - 1) * opt) << "seed " << seed << " k " << k;
    }
  }
}

TEST(LemmaSevenEighths, WeakenedConsequenceOnMetricInstances) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    auto g = random_graph(8, WeightClass::metric, 80 + seed);
    const Weight h = tour_weight(g, exact_max_tsp(g));
    const Weight mstar = matching_weight(g, max_weight_perfect_matching(g));
    for (int k : {4, 8}) {
      const Weight opt = kpack::testing::naive_optimal_packing(g, k, true);
      // h >= 5/8 opt + 1/2 M*
      EXPECT_GE(8 * h, 5 * opt + 4 * mstar) << "seed " << seed << " k " << k;
    }
  }
}

TEST(Split, EqualTourWeightsLoseOneEdgePerPath) {
  auto g = kpack::testing::uniform_graph(12, 5);
  auto h = exact_max_tsp(g);
  for (int k : {2, 3, 4, 6}) {
    auto s = split_cycle_best_offset(g, h, k, SplitObjective::plain);
    EXPECT_EQ(s.offset, 0);
    EXPECT_EQ(packing_weight(g, s.paths), (12 - 12 / k) * 5);
  }
}

TEST(Split, KeepsTheSingleHeavyEdge) {
  WeightedCompleteGraph g(8);
  HamiltonianCycle h{{0, 1, 2, 3, 4, 5, 6, 7}};
  for (int i = 0; i < 8; ++i) {
    const Edge e(h.order[i], h.order[(i + 1) % 8]);
    g.set(e.u, e.v, 1);
  }
  g.set(3, 4, 100);
  auto s = split_cycle_best_offset(g, h, 4, SplitObjective::plain);
  bool kept = false;
  for (const auto& p : s.paths.blocks)
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (Edge(p[i], p[i + 1]) == Edge(3, 4)) kept = true;
  EXPECT_TRUE(kept);
  EXPECT_EQ(s.objective, 100 + 5);
}

TEST(Split, Alg2ObjectiveBound) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = random_graph(12, WeightClass::general, 500 + seed);
    auto h = heuristic_max_tsp(g);
    const Weight w = tour_weight(g, h);
    for (int k : {2, 4, 6, 12}) {
      auto s = split_cycle_best_offset(g, h, k, SplitObjective::alg2);
      Weight best = -1;
      for (int off = 0; off < k; ++off) {
        // Objective recomputed from scratch for every offset.
        Weight plain = 0;
        Weight tilde = 0;
        for (int idx = 0; idx < 12 / k; ++idx) {
          std::vector<Vertex> p;
          for (int i = 0; i < k; ++i) p.push_back(h.order[(off + idx * k + i) % 12]);
          plain += kpack::testing::seq_weight(g, p, false);
          for (int i = 0; i + 1 < k; i += 2) tilde += g(p[i], p[i + 1]);
        }
        best = std::max(best, (k - 2) * plain + 2 * tilde);
      }
      EXPECT_EQ(s.objective, best);
      EXPECT_GE(k * s.objective, ((k - 1) * (k - 1) + 1) * w) << "seed " << seed << " k " << k;
    }
  }
}

TEST(Split, PlainBound) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = random_graph(12, WeightClass::general, 700 + seed);
    auto h = heuristic_max_tsp(g);
    for (int k : {2, 3, 4, 6, 12}) {
      auto s = split_cycle_best_offset(g, h, k, SplitObjective::plain);
      EXPECT_FALSE(validate_packing(g, s.paths).has_value());
      EXPECT_EQ(s.objective, packing_weight(g, s.paths));
      EXPECT_GE(k * s.objective, (k - 1) * tour_weight(g, h));
    }
  }
}

TEST(Split, Errors) {
  auto g = random_graph(12, WeightClass::general, 1);
  auto h = exact_max_tsp(g);
  EXPECT_THROW(split_cycle_best_offset(g, h, 5, SplitObjective::plain), Error);
  EXPECT_THROW(split_cycle_best_offset(g, h, 3, SplitObjective::alg2), Error);
  HamiltonianCycle bad{{0, 1, 2}};
  EXPECT_THROW(split_cycle_best_offset(g, bad, 3, SplitObjective::plain), Error);
}
