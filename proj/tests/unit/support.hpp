#pragma once

// Test-side oracles. Deliberately naive and independent of the library's
// DP, blossom and Held-Karp code.

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "kpack/diagnostics.hpp"
#include "kpack/graph.hpp"

namespace kpack::testing {

/// Collects warnings for the lifetime of the object.
struct CapturedWarnings {
  std::vector<std::string> messages;
  WarningSink previous;
  CapturedWarnings() {
    previous = set_warning_sink([this](std::string_view m) { messages.emplace_back(m); });
  }
  ~CapturedWarnings() { set_warning_sink(std::move(previous)); }
};

inline Weight seq_weight(const WeightedCompleteGraph& g, const std::vector<Vertex>& s, bool cycle) {
  Weight w = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) w += g(s[i], s[i + 1]);
  if (cycle && s.size() >= 3) w += g(s.back(), s.front());
  return w;
}

/// Best order of a vertex set over all k! permutations.
inline Weight naive_best_block(const WeightedCompleteGraph& g, std::vector<Vertex> s, bool cycle) {
  std::sort(s.begin(), s.end());
  Weight best = -1;
  do best = std::max(best, seq_weight(g, s, cycle));
  while (std::next_permutation(s.begin(), s.end()));
  return best;
}

/// Maximum over every partition of V into k-sets of the sum of best blocks.
inline Weight naive_optimal_packing(const WeightedCompleteGraph& g, int k, bool cycle) {
  const int n = g.size();
  std::vector<char> used(n, 0);
  std::function<Weight()> rec = [&]() -> Weight {
    int first = 0;
    while (first < n && used[first]) ++first;
    if (first == n) return 0;
    Weight best = -1;
    std::vector<Vertex> block{first};
    used[first] = 1;
    std::function<void(int)> pick = [&](int from) {
      if (static_cast<int>(block.size()) == k) {
        best = std::max(best, naive_best_block(g, block, cycle) + rec());
        return;
      }
      for (int v = from; v < n; ++v) {
        if (used[v]) continue;
        used[v] = 1;
        block.push_back(v);
        pick(v + 1);
        block.pop_back();
        used[v] = 0;
      }
    };
    pick(first + 1);
    used[first] = 0;
    return best;
  };
  return rec();
}

/// Heaviest Hamiltonian cycle over all (n-1)! orders with vertex 0 first.
inline Weight naive_max_tour(const WeightedCompleteGraph& g) {
  std::vector<Vertex> order(g.size());
  for (int i = 0; i < g.size(); ++i) order[i] = i;
  Weight best = -1;
  do best = std::max(best, seq_weight(g, order, true));
  while (std::next_permutation(order.begin() + 1, order.end()));
  return best;
}

inline WeightedCompleteGraph graph_from(int n, std::initializer_list<std::tuple<int, int, Weight>> edges,
                                        Weight rest = 0, WeightClass tag = WeightClass::general) {
  WeightedCompleteGraph g(n, tag);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.set(u, v, rest);
  for (auto [u, v, w] : edges) g.set(u, v, w);
  return g;
}

inline WeightedCompleteGraph uniform_graph(int n, Weight c, WeightClass tag = WeightClass::metric) {
  return graph_from(n, {}, c, tag);
}

inline WeightedCompleteGraph random_graph(int n, WeightClass c, std::uint64_t seed,
                                          Distribution d = Distribution::uniform) {
  InstanceSpec spec;
  spec.n = n;
  spec.weight_class = c;
  spec.distribution = c == WeightClass::metric && d == Distribution::uniform ? Distribution::euclidean : d;
  spec.seed = seed;
  spec.max_weight = 50;
  return generate_instance(spec);
}

}  // namespace kpack::testing
