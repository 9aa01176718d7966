#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "kpack/edge_groups.hpp"
#include "kpack/graph.hpp"
#include "kpack/tsp.hpp"

namespace kpack {

/// Closes every path v1..vk into the cycle v1..vk v1.
KCyclePacking complete_paths(const WeightedCompleteGraph& g, const KPathPacking& paths);

/// Heaviest of the k-1 cycles C_j = v1..vj vk v(k-1)..v(j+1); ties to smallest j.
std::vector<Vertex> best_cycle_from_path(const WeightedCompleteGraph& g,
                                         std::span<const Vertex> path);

/// Emits a warning when g violates the triangle inequality.
void warn_if_not_metric(const WeightedCompleteGraph& g, std::string_view algorithm);

struct TspRun {
  HamiltonianCycle tour;
  Weight tour_weight = 0;
  OffsetSplit split;
};

struct TspCycleResult {
  KCyclePacking cycles;
  Weight weight = 0;
  TspRun tsp;
};

struct GroupedCycleResult {
  KCyclePacking cycles;
  Weight weight = 0;
  GroupedConstruction construction;
};

/// Output of the contraction-based 4-packing on a perfect matching M*.
struct General4Result {
  KCyclePacking cycles;
  KPathPacking paths;
  Weight cycle_weight = 0;
  Weight path_weight = 0;
  Matching base;
  Weight base_weight = 0;
  /// Matching over super-vertices; index i stands for base.edges[i].
  Matching contracted;
  Weight contracted_weight = 0;
};

struct Metric4Result {
  KCyclePacking cycles;
  Weight weight = 0;
  Matching base;
  Weight base_weight = 0;
  Matching contracted;
  Weight contracted_weight = 0;
};

TspCycleResult alg1_metric_kcp(const WeightedCompleteGraph& g, int k, const TspSolver& tsp);

/// Needs even k.
TspCycleResult alg2_metric_kcp_even(const WeightedCompleteGraph& g, int k, const TspSolver& tsp);

/// Needs odd k >= 3.
GroupedCycleResult alg3_matching_kcp_odd(const WeightedCompleteGraph& g, int k,
                                         const std::optional<EdgeGroupPlan>& plan = std::nullopt,
                                         OrientationSearch search = OrientationSearch::automatic);

/// The override must be a maximum-weight perfect matching.
General4Result alg6_general_4cp(const WeightedCompleteGraph& g,
                                const std::optional<Matching>& matching_override = std::nullopt);

Metric4Result alg7_metric_4cp(const WeightedCompleteGraph& g,
                              const std::optional<Matching>& matching_override = std::nullopt);

/// M* or the checked override.
Matching perfect_matching_or_override(const WeightedCompleteGraph& g,
                                      const std::optional<Matching>& matching_override);

}  // namespace kpack
