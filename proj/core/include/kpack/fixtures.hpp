#pragma once

// Hand-built tight instances. Vertex v_i of a drawing is vertex i-1 here; for
// the 5x5 grid instance u(i,j) is vertex 5(i-1) + (j-1).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kpack/audit.hpp"
#include "kpack/edge_groups.hpp"
#include "kpack/graph.hpp"

namespace kpack {

enum class FixtureId { fig2_5cp, fig3_general4cp, fig4_general4pp, fig5_metric4cp, fig3_lifted_12 };

std::string_view to_string(FixtureId id);
/// Accepts the full id or its short prefix (fig2, fig3, fig4, fig5).
FixtureId parse_fixture_id(std::string_view text);
std::optional<FixtureId> try_parse_fixture_id(std::string_view text);
const std::vector<FixtureId>& all_fixtures();

struct Fixture {
  FixtureId id{};
  WeightedCompleteGraph graph;
  int k = 0;
  PackingKind kind = PackingKind::cycle;
  Algorithm algorithm = Algorithm::alg6;
  std::optional<Matching> matching_override;
  std::optional<EdgeGroupPlan> plan_override;
  /// A packing that reaches expected_opt.
  std::vector<std::vector<Vertex>> optimal_blocks;
  Weight expected_opt = 0;
  Weight expected_algorithm = 0;
  /// Weight of the matching the algorithm starts from (M* or M*_p).
  Weight expected_matching = 0;
  Ratio expected_ratio{0};
};

Fixture build_fixture(FixtureId id);

/// RunRequest reproducing the fixture's adversarial scenario.
RunRequest fixture_request(const Fixture& f);

struct FixtureCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct CertifiedOptimum {
  Weight weight = 0;
  /// Steps of the argument (oracle run, or per-row optimum plus upper bound).
  std::vector<FixtureCheck> checks;
};

/// OPT by the subset DP oracle when n is within its cap; otherwise by the row
/// argument: the witness blocks are each optimal on their vertex set and the
/// witness meets the bound (number of packing edges) * (largest weight).
CertifiedOptimum certified_optimum(const Fixture& f);

/// Runs the scripted checks: class, matching weight, OPT (oracle or, for the
/// 25-vertex grid, the row argument), algorithm weight and ratio.
std::vector<FixtureCheck> verify_fixture(const Fixture& f);

}  // namespace kpack
