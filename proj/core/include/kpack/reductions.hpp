#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kpack/graph.hpp"

namespace kpack {

/// w'(u,v) = w(u,v) - 1 on a {1,2}-weighted graph; the result is tagged zero_one.
WeightedCompleteGraph lift_12_to_01(const WeightedCompleteGraph& g);

/// w(packing on g) - w(packing on the lifted graph): the number of packing
/// edges, n for cycles and n - n/k for paths.
Weight lift_offset(int n, int k, PackingKind kind);

struct PluggableSolver {
  PackingKind kind = PackingKind::cycle;
  int k = 3;
  std::function<std::vector<std::vector<Vertex>>(const WeightedCompleteGraph&)> solve;
  /// Claimed ratio on {0,1}-weighted inputs.
  Ratio claimed_ratio{0};
  std::string name;
};

/// Exact optimum through the subset DP oracle; claimed ratio 1.
PluggableSolver exact_plug(PackingKind kind, int k);

/// Anchors each block at the smallest free vertex and extends it greedily along
/// the heaviest edge to a free vertex. Valid output, no guarantee (claimed ratio 0).
PluggableSolver greedy_plug(PackingKind kind, int k);

struct ReductionResult {
  PackingKind kind = PackingKind::cycle;
  int k = 0;
  std::vector<std::vector<Vertex>> blocks;
  Weight weight = 0;
  WeightedCompleteGraph lifted;
  Weight lifted_weight = 0;
  std::string solver_name;
  Ratio claimed_ratio{0};
};

/// Lift, solve on the {0,1} graph, and read the same packing back on g.
ReductionResult solve_12_via_01(const WeightedCompleteGraph& g, const PluggableSolver& solver);

/// 3-cycle packing on {1,2}-weighted graphs through the {0,1} reduction.
ReductionResult three_cp_9_11(const WeightedCompleteGraph& g,
                              const PluggableSolver& zero_one_solver = exact_plug(PackingKind::cycle, 3));

}  // namespace kpack
