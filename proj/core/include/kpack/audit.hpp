#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kpack/edge_groups.hpp"
#include "kpack/graph.hpp"
#include "kpack/tsp.hpp"

namespace kpack {

enum class Algorithm {
  alg1,
  alg2,
  alg3,
  alg4,
  alg5,
  kpp_combined,
  alg6,
  alg7,
  alg8,
  general4pp,
  reduce12,
  cp911,
};

/// CLI names: alg1 ... alg8, kpp-combined, general4pp, reduce12, 3cp911.
std::string_view to_string(Algorithm a);
Algorithm parse_algorithm(std::string_view text);
const std::vector<Algorithm>& all_algorithms();

struct RunRequest {
  Algorithm algorithm = Algorithm::alg1;
  int k = 4;
  TspSolverKind tsp = TspSolverKind::exact;
  /// Packing kind for reduce12; every other algorithm fixes its own.
  PackingKind reduce_kind = PackingKind::cycle;
  std::optional<Matching> matching_override;
  std::optional<EdgeGroupPlan> plan_override;
};

PackingKind output_kind(const RunRequest& request);

struct AuditEntry {
  std::string name;
  Ratio lhs{0};
  Ratio rhs{0};
  /// ">=" or "==".
  std::string relation = ">=";
  bool holds = false;
};

AuditEntry make_audit(std::string name, Ratio lhs, Ratio rhs, std::string relation = ">=");

struct AlgorithmRun {
  RunRequest request;
  PackingKind kind = PackingKind::cycle;
  int k = 0;
  std::vector<std::vector<Vertex>> blocks;
  Weight weight = 0;
  /// Weight of the Hamiltonian cycle used, for TSP-based algorithms.
  std::optional<Weight> tour_weight;
  /// Lemma-level inequalities checkable from the run alone.
  std::vector<AuditEntry> audits;
};

/// Runs one algorithm and collects its lemma audits. Metric-only audits are
/// skipped on non-metric inputs.
AlgorithmRun run_algorithm(const WeightedCompleteGraph& g, const RunRequest& request);

/// Proven lower bound on algorithm/OPT for this input, or nullopt when none
/// applies (wrong weight class, greedy TSP, k outside the proven range).
std::optional<Ratio> guaranteed_ratio(const WeightedCompleteGraph& g, const RunRequest& request);

struct RatioReport {
  std::string instance_id;
  std::string algorithm;
  PackingKind kind = PackingKind::cycle;
  int k = 0;
  Weight algorithm_weight = 0;
  Weight oracle_weight = 0;
  /// algorithm_weight / oracle_weight; 1 when both are 0.
  Ratio ratio{1};
  std::optional<Ratio> guaranteed;
  std::vector<std::vector<Vertex>> blocks;
  std::vector<AuditEntry> audits;

  bool all_hold() const;
};

struct AuditOptions {
  std::optional<int> oracle_max_n;
  /// Optimum certified elsewhere; used instead of the oracle when kind and k match.
  std::optional<PackingKind> known_kind;
  int known_k = 0;
  Weight known_optimum = 0;
};

/// Runs every requested algorithm on g, compares against the exact oracle and
/// adds the oracle-level audits (ratio bound, perfect matching against the
/// optimal even-k cycle packing, exact TSP against the optimal cycle packing).
std::vector<RatioReport> audit_instance(const WeightedCompleteGraph& g,
                                        const std::vector<RunRequest>& requests,
                                        const std::string& instance_id,
                                        const AuditOptions& options = {});

std::string format_ratio(const Ratio& r);
double to_double(const Ratio& r);

}  // namespace kpack
