#include "kpack/tsp.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace kpack {

std::string_view to_string(TspSolverKind kind) {
  return kind == TspSolverKind::exact ? "exact" : "greedy";
}

TspSolverKind parse_tsp_solver(std::string_view text) {
  if (text == "exact") return TspSolverKind::exact;
  if (text == "greedy") return TspSolverKind::greedy;
  throw Error("unknown TSP solver '" + std::string(text) + "'");
}

TspSolver make_tsp_solver(TspSolverKind kind) {
  if (kind == TspSolverKind::exact)
    return [](const WeightedCompleteGraph& g) { return exact_max_tsp(g); };
  return [](const WeightedCompleteGraph& g) { return heuristic_max_tsp(g); };
}

HamiltonianCycle exact_max_tsp(const WeightedCompleteGraph& g, int cap) {
  const int n = g.size();
  if (n < 3) throw Error("a Hamiltonian cycle needs n >= 3");
  if (n > cap)
    throw Error("exact TSP: n=" + std::to_string(n) + " above cap " + std::to_string(cap));

  // Vertex 0 is the fixed start; bit i of a mask stands for vertex i + 1.
  const int m = n - 1;
  const std::size_t states = std::size_t{1} << m;
  std::vector<Weight> dp(states * m, -1);
  std::vector<std::int8_t> parent(states * m, -1);
  for (int j = 0; j < m; ++j) dp[(std::size_t{1} << j) * m + j] = g(0, j + 1);

  for (std::size_t mask = 1; mask < states; ++mask) {
    for (int j = 0; j < m; ++j) {
      const Weight cur = dp[mask * m + j];
      if (cur < 0) continue;
      for (int nxt = 0; nxt < m; ++nxt) {
        if (mask & (std::size_t{1} << nxt)) continue;
        const std::size_t nmask = mask | (std::size_t{1} << nxt);
        const Weight cand = cur + g(j + 1, nxt + 1);
        if (cand > dp[nmask * m + nxt]) {
          dp[nmask * m + nxt] = cand;
          parent[nmask * m + nxt] = static_cast<std::int8_t>(j);
        }
      }
    }
  }

  const std::size_t full = states - 1;
  int last = 0;
  Weight best = -1;
  for (int j = 0; j < m; ++j) {
    const Weight cand = dp[full * m + j] + g(j + 1, 0);
    if (cand > best) {
      best = cand;
      last = j;
    }
  }

  std::vector<Vertex> rev;
  std::size_t mask = full;
  int j = last;
  while (j >= 0) {
    rev.push_back(j + 1);
    const int pj = parent[mask * m + j];
    mask &= ~(std::size_t{1} << j);
    j = pj;
  }
  HamiltonianCycle h;
  h.order.push_back(0);
  h.order.insert(h.order.end(), rev.rbegin(), rev.rend());
  return h;
}

HamiltonianCycle heuristic_max_tsp(const WeightedCompleteGraph& g) {
  const int n = g.size();
  if (n < 3) throw Error("a Hamiltonian cycle needs n >= 3");
  std::vector<std::tuple<Weight, Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(g(u, v), u, v);
  std::stable_sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
    return std::get<0>(a) > std::get<0>(b);
  });

  std::vector<int> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  std::vector<int> degree(n, 0);
  std::vector<std::vector<Vertex>> adj(n);
  int taken = 0;
  for (const auto& [w, u, v] : edges) {
    if (taken == n - 1) break;
    if (degree[u] >= 2 || degree[v] >= 2) continue;
    const int cu = find(u);
    const int cv = find(v);
    if (cu == cv) continue;
    comp[cu] = cv;
    ++degree[u];
    ++degree[v];
    adj[u].push_back(v);
    adj[v].push_back(u);
    ++taken;
  }

  // The kept edges form one Hamiltonian path; walk it from an endpoint.
  Vertex start = 0;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] < 2) {
      start = v;
      break;
    }
  HamiltonianCycle h;
  Vertex prev = -1;
  Vertex cur = start;
  while (static_cast<int>(h.order.size()) < n) {
    h.order.push_back(cur);
    Vertex next = -1;
    for (Vertex x : adj[cur])
      if (x != prev) {
        next = x;
        break;
      }
    if (next < 0) break;
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(h.order.size()) != n) throw Error("internal: greedy tour is incomplete");
  return h;
}

namespace {

std::vector<Vertex> path_at(const HamiltonianCycle& h, int k, int offset, int index) {
  const int n = static_cast<int>(h.order.size());
  std::vector<Vertex> p(k);
  for (int i = 0; i < k; ++i) p[i] = h.order[(offset + index * k + i) % n];
  return p;
}

}  // namespace

Weight split_objective_at(const WeightedCompleteGraph& g, const HamiltonianCycle& h, int k,
                          int offset, SplitObjective objective) {
  const int n = static_cast<int>(h.order.size());
  Weight plain = 0;
  Weight tilde = 0;
  for (int idx = 0; idx < n / k; ++idx) {
    const auto p = path_at(h, k, offset, idx);
    plain += path_weight(g, p);
    if (objective == SplitObjective::alg2) tilde += tilde_weight(g, p);
  }
  if (objective == SplitObjective::plain) return plain;
  return (k - 2) * plain + 2 * tilde;
}

OffsetSplit split_cycle_best_offset(const WeightedCompleteGraph& g, const HamiltonianCycle& h,
                                    int k, SplitObjective objective) {
  const int n = g.size();
  if (auto bad = validate_tour(g, h)) throw Error("invalid tour: " + *bad);
  if (k < 2 || n % k != 0) throw Error("n not divisible by k");
  if (objective == SplitObjective::alg2 && k % 2 != 0)
    throw Error("the alg2 split objective needs even k");

  OffsetSplit best;
  best.objective = -1;
  for (int offset = 0; offset < k; ++offset) {
    const Weight val = split_objective_at(g, h, k, offset, objective);
    if (val > best.objective) {
      best.objective = val;
      best.offset = offset;
    }
  }
  best.paths.k = k;
  for (int idx = 0; idx < n / k; ++idx) best.paths.blocks.push_back(path_at(h, k, best.offset, idx));
  return best;
}

}  // namespace kpack
