#include "kpack/reductions.hpp"

#include "kpack/oracle.hpp"

namespace kpack {

namespace {

void require_one_two(const WeightedCompleteGraph& g) {
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = u + 1; v < g.size(); ++v)
      if (g(u, v) != g.denominator() && g(u, v) != 2 * g.denominator())
        throw Error("weight outside {1,2} at (" + std::to_string(u) + "," + std::to_string(v) + ")");
}

}  // namespace

WeightedCompleteGraph lift_12_to_01(const WeightedCompleteGraph& g) {
  require_one_two(g);
  WeightedCompleteGraph out(g.size(), WeightClass::zero_one, g.denominator());
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = u + 1; v < g.size(); ++v) out.set(u, v, g(u, v) - g.denominator());
  return out;
}

Weight lift_offset(int n, int k, PackingKind kind) {
  if (k < 1 || n % k != 0) throw Error("n not divisible by k");
  return kind == PackingKind::cycle ? n : n - n / k;
}

PluggableSolver exact_plug(PackingKind kind, int k) {
  PluggableSolver s;
  s.kind = kind;
  s.k = k;
  s.claimed_ratio = 1;
  s.name = "exact";
  s.solve = [kind, k](const WeightedCompleteGraph& g) {
    return optimal_k_packing(g, k, kind).blocks;
  };
  return s;
}

PluggableSolver greedy_plug(PackingKind kind, int k) {
  PluggableSolver s;
  s.kind = kind;
  s.k = k;
  s.claimed_ratio = 0;
  s.name = "greedy";
  s.solve = [k](const WeightedCompleteGraph& g) {
    const int n = g.size();
    if (n % k != 0) throw Error("n not divisible by k");
    std::vector<char> used(n, 0);
    std::vector<std::vector<Vertex>> blocks;
    for (Vertex start = 0; start < n; ++start) {
      if (used[start]) continue;
      std::vector<Vertex> block{start};
      used[start] = 1;
      while (static_cast<int>(block.size()) < k) {
        Vertex next = -1;
        for (Vertex v = 0; v < n; ++v)
          if (!used[v] && (next < 0 || g(block.back(), v) > g(block.back(), next))) next = v;
        used[next] = 1;
        block.push_back(next);
      }
      blocks.push_back(std::move(block));
    }
    return blocks;
  };
  return s;
}

ReductionResult solve_12_via_01(const WeightedCompleteGraph& g, const PluggableSolver& solver) {
  if (!solver.solve) throw Error("solver has no solve procedure");
  ReductionResult r;
  r.kind = solver.kind;
  r.k = solver.k;
  r.solver_name = solver.name;
  r.claimed_ratio = solver.claimed_ratio;
  if (g.size() % solver.k != 0) throw Error("n not divisible by k");
  r.lifted = lift_12_to_01(g);
  r.blocks = solver.solve(r.lifted);
  if (auto bad = validate_packing(r.lifted, r.blocks, r.k, r.kind))
    throw Error("plugged solver '" + solver.name + "' returned an invalid packing: " + *bad);
  r.lifted_weight = packing_weight(r.lifted, r.blocks, r.k, r.kind);
  r.weight = packing_weight(g, r.blocks, r.k, r.kind);
  return r;
}

ReductionResult three_cp_9_11(const WeightedCompleteGraph& g, const PluggableSolver& zero_one_solver) {
  if (zero_one_solver.kind != PackingKind::cycle || zero_one_solver.k != 3)
    throw Error("3cp911 needs a 3-cycle solver");
  if (g.size() % 3 != 0) throw Error("n not divisible by k");
  return solve_12_via_01(g, zero_one_solver);
}

}  // namespace kpack
