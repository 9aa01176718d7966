#pragma once

#include <optional>

#include "kpack/cycle_packing.hpp"
#include "kpack/edge_groups.hpp"
#include "kpack/graph.hpp"
#include "kpack/tsp.hpp"

namespace kpack {

struct TspPathResult {
  KPathPacking paths;
  Weight weight = 0;
  TspRun tsp;
};

struct GroupedPathResult {
  KPathPacking paths;
  Weight weight = 0;
  GroupedConstruction construction;
};

struct CombinedPathResult {
  KPathPacking paths;
  Weight weight = 0;
  TspPathResult alg4;
  GroupedPathResult alg5;
  bool chose_alg4 = true;
};

struct Metric4PathResult {
  KPathPacking paths;
  Weight weight = 0;
  /// P_4 from the contraction construction.
  General4Result p4;
  /// P'_4 built around M**_{n/4}.
  KPathPacking p4_prime;
  Weight p4_prime_weight = 0;
  Matching quarter_matching;
  Weight quarter_matching_weight = 0;
  bool chose_p4 = true;
};

TspPathResult alg4_tsp_kpp(const WeightedCompleteGraph& g, int k, const TspSolver& tsp);

/// Needs even k >= 4.
GroupedPathResult alg5_matching_kpp_even(const WeightedCompleteGraph& g, int k,
                                         const std::optional<EdgeGroupPlan>& plan = std::nullopt,
                                         OrientationSearch search = OrientationSearch::automatic);

/// Heavier of alg4 and alg5; ties to alg4.
CombinedPathResult metric_kpp_combined(const WeightedCompleteGraph& g, int k, const TspSolver& tsp);

/// The P_4 half of alg6_general_4cp.
General4Result general_4pp(const WeightedCompleteGraph& g,
                           const std::optional<Matching>& matching_override = std::nullopt);

/// Heavier of P_4 and P'_4; ties to P_4.
Metric4PathResult alg8_metric_4pp(const WeightedCompleteGraph& g,
                                  const std::optional<Matching>& matching_override = std::nullopt);

}  // namespace kpack
