#include "kpack/path_packing.hpp"

#include "kpack/matching.hpp"

namespace kpack {

TspPathResult alg4_tsp_kpp(const WeightedCompleteGraph& g, int k, const TspSolver& tsp) {
  if (k < 2 || g.size() % k != 0) throw Error("n not divisible by k");
  TspPathResult r;
  r.tsp.tour = tsp(g);
  if (auto bad = validate_tour(g, r.tsp.tour))
    throw Error("TSP solver returned an invalid tour: " + *bad);
  r.tsp.tour_weight = tour_weight(g, r.tsp.tour);
  r.tsp.split = split_cycle_best_offset(g, r.tsp.tour, k, SplitObjective::plain);
  r.paths = r.tsp.split.paths;
  r.weight = packing_weight(g, r.paths);
  return r;
}

GroupedPathResult alg5_matching_kpp_even(const WeightedCompleteGraph& g, int k,
                                         const std::optional<EdgeGroupPlan>& plan,
                                         OrientationSearch search) {
  if (k % 2 != 0) throw Error("alg5 needs even k");
  if (k < 4) throw Error("alg5 needs k >= 4");
  if (g.size() % k != 0) throw Error("n not divisible by k");
  warn_if_not_metric(g, "alg5");
  GroupedPathResult r;
  r.construction = build_grouped(g, k, PackingKind::path, plan, search);
  r.paths = KPathPacking{k, r.construction.blocks};
  r.weight = packing_weight(g, r.paths);
  return r;
}

CombinedPathResult metric_kpp_combined(const WeightedCompleteGraph& g, int k,
                                       const TspSolver& tsp) {
  if (k % 2 != 0) throw Error("kpp-combined needs even k");
  CombinedPathResult r;
  r.alg4 = alg4_tsp_kpp(g, k, tsp);
  r.alg5 = alg5_matching_kpp_even(g, k);
  r.chose_alg4 = r.alg4.weight >= r.alg5.weight;
  r.paths = r.chose_alg4 ? r.alg4.paths : r.alg5.paths;
  r.weight = r.chose_alg4 ? r.alg4.weight : r.alg5.weight;
  return r;
}

General4Result general_4pp(const WeightedCompleteGraph& g,
                           const std::optional<Matching>& matching_override) {
  return alg6_general_4cp(g, matching_override);
}

Metric4PathResult alg8_metric_4pp(const WeightedCompleteGraph& g,
                                  const std::optional<Matching>& matching_override) {
  const int n = g.size();
  if (n % 4 != 0) throw Error("n not divisible by k");
  warn_if_not_metric(g, "alg8");
  Metric4PathResult r;
  r.p4 = general_4pp(g, matching_override);

  r.quarter_matching = max_weight_matching_of_size(g, n / 4);
  r.quarter_matching_weight = matching_weight(g, r.quarter_matching);
  std::vector<char> covered(n, 0);
  for (const Edge& e : r.quarter_matching.edges) covered[e.u] = covered[e.v] = 1;
  std::vector<Vertex> free;
  for (Vertex v = 0; v < n; ++v)
    if (!covered[v]) free.push_back(v);

  r.p4_prime.k = 4;
  for (std::size_t i = 0; i < r.quarter_matching.edges.size(); ++i) {
    const auto [x, y] = r.quarter_matching.edges[i];
    Vertex u = free[2 * i];
    Vertex z = free[2 * i + 1];
    if (g(u, x) + g(y, z) < g(z, x) + g(y, u)) std::swap(u, z);
    r.p4_prime.blocks.push_back({u, x, y, z});
  }
  r.p4_prime_weight = packing_weight(g, r.p4_prime);

  r.chose_p4 = r.p4.path_weight >= r.p4_prime_weight;
  r.paths = r.chose_p4 ? r.p4.paths : r.p4_prime;
  r.weight = r.chose_p4 ? r.p4.path_weight : r.p4_prime_weight;
  return r;
}

}  // namespace kpack
