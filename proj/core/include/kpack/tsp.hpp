#pragma once

#include <functional>
#include <string_view>

#include "kpack/graph.hpp"

namespace kpack {

inline constexpr int kExactTspCap = 18;

/// Maximum-weight Hamiltonian cycle by dynamic programming over
/// (visited subset, endpoint). Memory and time grow as 2^n; n is capped.
HamiltonianCycle exact_max_tsp(const WeightedCompleteGraph& g, int cap = kExactTspCap);

/// Greedy heaviest-edge tour: scan edges by non-increasing weight, keep an edge
/// when both ends have degree < 2 and it closes no premature cycle, then close
/// the resulting Hamiltonian path. No approximation guarantee is claimed.
HamiltonianCycle heuristic_max_tsp(const WeightedCompleteGraph& g);

enum class TspSolverKind { exact, greedy };

std::string_view to_string(TspSolverKind kind);
TspSolverKind parse_tsp_solver(std::string_view text);

using TspSolver = std::function<HamiltonianCycle(const WeightedCompleteGraph&)>;

TspSolver make_tsp_solver(TspSolverKind kind);

enum class SplitObjective {
  /// Maximize the total path weight.
  plain,
  /// Maximize (k-2) * w(P) + 2 * tilde_w(P); needs even k.
  alg2,
};

struct OffsetSplit {
  KPathPacking paths;
  /// Index of the first kept vertex on the tour, in [0, k).
  int offset = 0;
  /// Value of the chosen objective for the returned packing.
  Weight objective = 0;
};

/// Deletes every k-th tour edge at the best of the k rotations. Ties go to the
/// smallest offset.
OffsetSplit split_cycle_best_offset(const WeightedCompleteGraph& g, const HamiltonianCycle& h,
                                    int k, SplitObjective objective);

/// Value of the objective for the packing obtained at one particular offset.
Weight split_objective_at(const WeightedCompleteGraph& g, const HamiltonianCycle& h, int k,
                          int offset, SplitObjective objective);

}  // namespace kpack
