#include "kpack/cycle_packing.hpp"

#include <string>

#include "kpack/diagnostics.hpp"
#include "kpack/matching.hpp"

namespace kpack {

KCyclePacking complete_paths(const WeightedCompleteGraph& g, const KPathPacking& paths) {
  if (auto bad = validate_packing(g, paths)) throw Error("invalid path packing: " + *bad);
  return KCyclePacking{paths.k, paths.blocks};
}

std::vector<Vertex> best_cycle_from_path(const WeightedCompleteGraph& g,
                                         std::span<const Vertex> path) {
  const int k = static_cast<int>(path.size());
  if (k < 3) throw Error("a cycle needs at least 3 vertices");
  std::vector<Vertex> best;
  Weight best_weight = -1;
  for (int j = 1; j <= k - 1; ++j) {
    std::vector<Vertex> c(path.begin(), path.begin() + j);
    c.insert(c.end(), path.rbegin(), path.rend() - j);
    const Weight w = cycle_weight(g, c);
    if (w > best_weight) {
      best_weight = w;
      best = std::move(c);
    }
  }
  return best;
}

void warn_if_not_metric(const WeightedCompleteGraph& g, std::string_view algorithm) {
  const MetricCheck check = is_metric(g);
  if (check) return;
  std::string msg = std::string(algorithm) + ": input is not metric";
  if (check.violation) {
    const auto& [u, x, v] = *check.violation;
    msg += " (w(" + std::to_string(u) + "," + std::to_string(v) + ") > w(" + std::to_string(u) +
           "," + std::to_string(x) + ") + w(" + std::to_string(x) + "," + std::to_string(v) + "))";
  }
  warn(msg + "; ratio guarantees do not apply");
}

namespace {

void require_divisible(const WeightedCompleteGraph& g, int k) {
  if (k < 1 || g.size() % k != 0) throw Error("n not divisible by k");
}

TspRun run_tsp(const WeightedCompleteGraph& g, int k, const TspSolver& tsp,
               SplitObjective objective) {
  TspRun run;
  run.tour = tsp(g);
  if (auto bad = validate_tour(g, run.tour)) throw Error("TSP solver returned an invalid tour: " + *bad);
  run.tour_weight = tour_weight(g, run.tour);
  run.split = split_cycle_best_offset(g, run.tour, k, objective);
  return run;
}

}  // namespace

TspCycleResult alg1_metric_kcp(const WeightedCompleteGraph& g, int k, const TspSolver& tsp) {
  require_divisible(g, k);
  if (k < 3) throw Error("k-cycle packing needs k >= 3");
  warn_if_not_metric(g, "alg1");
  TspCycleResult r;
  r.tsp = run_tsp(g, k, tsp, SplitObjective::plain);
  r.cycles = complete_paths(g, r.tsp.split.paths);
  r.weight = packing_weight(g, r.cycles);
  return r;
}

TspCycleResult alg2_metric_kcp_even(const WeightedCompleteGraph& g, int k, const TspSolver& tsp) {
  if (k % 2 != 0) throw Error("alg2 needs even k");
  require_divisible(g, k);
  if (k < 4) throw Error("k-cycle packing needs k >= 3");
  warn_if_not_metric(g, "alg2");
  TspCycleResult r;
  r.tsp = run_tsp(g, k, tsp, SplitObjective::alg2);
  r.cycles.k = k;
  for (const auto& p : r.tsp.split.paths.blocks) r.cycles.blocks.push_back(best_cycle_from_path(g, p));
  r.weight = packing_weight(g, r.cycles);
  return r;
}

GroupedCycleResult alg3_matching_kcp_odd(const WeightedCompleteGraph& g, int k,
                                         const std::optional<EdgeGroupPlan>& plan,
                                         OrientationSearch search) {
  if (k % 2 == 0) throw Error("alg3 needs odd k");
  if (k < 3) throw Error("k-cycle packing needs k >= 3");
  require_divisible(g, k);
  warn_if_not_metric(g, "alg3");
  GroupedCycleResult r;
  r.construction = build_grouped(g, k, PackingKind::cycle, plan, search);
  r.cycles = KCyclePacking{k, r.construction.blocks};
  r.weight = packing_weight(g, r.cycles);
  return r;
}

Matching perfect_matching_or_override(const WeightedCompleteGraph& g,
                                      const std::optional<Matching>& matching_override) {
  Matching best = max_weight_perfect_matching(g);
  if (!matching_override) return best;
  Matching m = normalized(*matching_override);
  if (auto bad = validate_matching(g, m)) throw Error("matching override: " + *bad);
  if (m.size() != g.size() / 2) throw Error("matching override is not a perfect matching");
  if (matching_weight(g, m) != matching_weight(g, best))
    throw Error("matching override weighs " + std::to_string(matching_weight(g, m)) +
                ", a maximum perfect matching weighs " + std::to_string(matching_weight(g, best)));
  return m;
}

General4Result alg6_general_4cp(const WeightedCompleteGraph& g,
                                const std::optional<Matching>& matching_override) {
  if (g.size() % 4 != 0) throw Error("n not divisible by k");
  General4Result r;
  r.base = perfect_matching_or_override(g, matching_override);
  r.base_weight = matching_weight(g, r.base);

  const int s = r.base.size();
  // connector[i][j] = (x in edge i, y in edge j) realizing the heaviest super-edge
  std::vector<std::pair<Vertex, Vertex>> connector(static_cast<std::size_t>(s) * s);
  WeightedCompleteGraph contracted(s);
  for (int i = 0; i < s; ++i) {
    for (int j = i + 1; j < s; ++j) {
      const Edge a = r.base.edges[i];
      const Edge b = r.base.edges[j];
      const std::pair<Vertex, Vertex> options[] = {{a.u, b.u}, {a.u, b.v}, {a.v, b.u}, {a.v, b.v}};
      std::pair<Vertex, Vertex> best = options[0];
      for (const auto& o : options)
        if (g(o.first, o.second) > g(best.first, best.second)) best = o;
      connector[static_cast<std::size_t>(i) * s + j] = best;
      contracted.set(i, j, g(best.first, best.second));
    }
  }
  r.contracted = max_weight_perfect_matching(contracted);
  r.contracted_weight = matching_weight(contracted, r.contracted);

  r.paths.k = 4;
  for (const Edge& e : r.contracted.edges) {
    const auto [x, y] = connector[static_cast<std::size_t>(e.u) * s + e.v];
    const Vertex u = r.base.edges[e.u].other(x);
    const Vertex z = r.base.edges[e.v].other(y);
    r.paths.blocks.push_back({u, x, y, z});
  }
  r.path_weight = packing_weight(g, r.paths);
  r.cycles = complete_paths(g, r.paths);
  r.cycle_weight = packing_weight(g, r.cycles);
  return r;
}

Metric4Result alg7_metric_4cp(const WeightedCompleteGraph& g,
                              const std::optional<Matching>& matching_override) {
  if (g.size() % 4 != 0) throw Error("n not divisible by k");
  warn_if_not_metric(g, "alg7");
  Metric4Result r;
  r.base = perfect_matching_or_override(g, matching_override);
  r.base_weight = matching_weight(g, r.base);

  const int s = r.base.size();
  std::vector<char> use_b(static_cast<std::size_t>(s) * s, 0);
  WeightedCompleteGraph contracted(s);
  for (int i = 0; i < s; ++i) {
    for (int j = i + 1; j < s; ++j) {
      const auto [u, x] = r.base.edges[i];
      const auto [y, z] = r.base.edges[j];
      const Weight a = g(u, z) + g(x, y);
      const Weight b = g(u, y) + g(x, z);
      use_b[static_cast<std::size_t>(i) * s + j] = b > a;
      contracted.set(i, j, b > a ? b : a);
    }
  }
  r.contracted = max_weight_perfect_matching(contracted);
  r.contracted_weight = matching_weight(contracted, r.contracted);

  r.cycles.k = 4;
  for (const Edge& e : r.contracted.edges) {
    const auto [u, x] = r.base.edges[e.u];
    const auto [y, z] = r.base.edges[e.v];
    if (use_b[static_cast<std::size_t>(e.u) * s + e.v])
      r.cycles.blocks.push_back({u, x, z, y});
    else
      r.cycles.blocks.push_back({u, x, y, z});
  }
  r.weight = packing_weight(g, r.cycles);
  return r;
}

}  // namespace kpack
