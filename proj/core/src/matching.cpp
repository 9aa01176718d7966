#include <algorithm>
#include <limits>

#include "kpack/matching.hpp"

namespace kpack {

Matching normalized(Matching m) {
  for (Edge& e : m.edges) e = Edge(e.u, e.v);
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

namespace {

Matching from_mates(const std::vector<Vertex>& mate, int real_n) {
  Matching m;
  for (Vertex v = 0; v < real_n; ++v)
    if (mate[v] > v && mate[v] < real_n) m.edges.emplace_back(v, mate[v]);
  return normalized(std::move(m));
}

}  // namespace

Matching max_weight_perfect_matching(const WeightedCompleteGraph& g) {
  const int n = g.size();
  if (n % 2 != 0) throw Error("perfect matching needs an even vertex count");
  std::vector<WeightedEdge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, g(u, v)});
  Matching m = from_mates(maximum_weight_matching(n, edges, true), n);
  if (m.size() != n / 2) throw Error("internal: matching engine returned a non-perfect matching");
  return m;
}

Matching max_weight_matching_of_size(const WeightedCompleteGraph& g, int p) {
  const int n = g.size();
  if (p < 0 || 2 * p > n) throw Error("matching size p must satisfy 0 <= 2p <= n");
  if (p == 0) return {};
  const int extra = n - 2 * p;
  const int total = n + extra;
  const Weight big = 1 + g.total_weight();
  std::vector<WeightedEdge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, g(u, v)});
  for (Vertex d = n; d < total; ++d) {
    for (Vertex u = 0; u < n; ++u) edges.push_back({u, d, big});
    for (Vertex e = d + 1; e < total; ++e) edges.push_back({d, e, 0});
  }
  Matching m = from_mates(maximum_weight_matching(total, edges, true), n);
  if (m.size() != p) throw Error("internal: size-constrained matching has wrong cardinality");
  return m;
}

std::uint64_t count_matchings(int n, int p) {
  if (p < 0 || 2 * p > n) return 0;
  // C(n, 2p) * (2p - 1)!!
  long double c = 1;
  for (int i = 0; i < 2 * p; ++i) c = c * (n - i) / (i + 1);
  for (int i = 2 * p - 1; i > 1; i -= 2) c *= i;
  if (c >= static_cast<long double>(std::numeric_limits<std::uint64_t>::max()))
    return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(c + 0.5L);
}

namespace {

struct BruteForce {
  const WeightedCompleteGraph& g;
  int p;
  std::vector<char> used;
  std::vector<Edge> current;
  std::vector<Edge> best;
  Weight best_weight = -1;

  void run(Vertex from, int remaining, int vertices_left, Weight acc) {
    if (remaining == 0) {
      if (acc > best_weight) {
        best_weight = acc;
        best = current;
      }
      return;
    }
    if (2 * remaining > vertices_left) return;
    Vertex v = from;
    while (v < g.size() && used[v]) ++v;
    if (v >= g.size()) return;
    used[v] = 1;
    for (Vertex u = v + 1; u < g.size(); ++u) {
      if (used[u]) continue;
      used[u] = 1;
      current.emplace_back(v, u);
      run(v + 1, remaining - 1, vertices_left - 2, acc + g(v, u));
      current.pop_back();
      used[u] = 0;
    }
    // v stays unmatched
    run(v + 1, remaining, vertices_left - 1, acc);
    used[v] = 0;
  }
};

}  // namespace

Matching brute_force_matching(const WeightedCompleteGraph& g, int p, std::uint64_t cap) {
  if (p < 0 || 2 * p > g.size()) throw Error("matching size p must satisfy 0 <= 2p <= n");
  if (count_matchings(g.size(), p) > cap)
    throw Error("brute-force matching: instance above cap");
  BruteForce bf{g, p, std::vector<char>(g.size(), 0), {}, {}, -1};
  bf.run(0, p, g.size(), 0);
  return normalized(Matching{bf.best});
}

}  // namespace kpack
