#include "kpack/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_map>

namespace kpack {

namespace {

std::uint64_t order_count(int k, PackingKind kind) {
  if (k <= 2) return 1;
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) {
    if (f > UINT64_MAX / i) return UINT64_MAX;
    f *= i;
  }
  return kind == PackingKind::cycle ? f / (2 * k) : f / 2;
}

}  // namespace

BlockTour best_k_tour_on_set(const WeightedCompleteGraph& g, std::span<const Vertex> S,
                             PackingKind kind, std::uint64_t cap) {
  const int k = static_cast<int>(S.size());
  if (kind == PackingKind::cycle && k < 3) throw Error("a cycle needs at least 3 vertices");
  if (k < 1) throw Error("empty vertex set");
  if (order_count(k, kind) > cap) throw Error("best_k_tour_on_set: cap exceeded");

  std::vector<Vertex> v(S.begin(), S.end());
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) throw Error("vertex set has duplicates");

  BlockTour best;
  best.weight = -1;
  if (kind == PackingKind::cycle) {
    // v[0] fixed first; a reversal is skipped by requiring order[1] < order[k-1].
    do {
      if (v[1] > v[k - 1]) continue;
      const Weight w = cycle_weight(g, v);
      if (w > best.weight) {
        best.weight = w;
        best.order = v;
      }
    } while (std::next_permutation(v.begin() + 1, v.end()));
  } else {
    do {
      if (k > 1 && v[0] > v[k - 1]) continue;
      const Weight w = path_weight(g, v);
      if (w > best.weight) {
        best.weight = w;
        best.order = v;
      }
    } while (std::next_permutation(v.begin(), v.end()));
  }
  return best;
}

int default_oracle_cap(int k) { return (k == 3 || k == 5) ? 15 : 16; }

OptimalPacking optimal_k_packing(const WeightedCompleteGraph& g, int k, PackingKind kind,
                                 std::optional<int> max_n) {
  const int n = g.size();
  if (k < 1 || n % k != 0) throw Error("n not divisible by k");
  if (kind == PackingKind::cycle && k < 3) throw Error("k-cycle packing needs k >= 3");
  const int cap = max_n.value_or(default_oracle_cap(k));
  if (n > cap || n > 24)
    throw Error("oracle cap exceeded: n=" + std::to_string(n) + " > " + std::to_string(cap));

  using Mask = std::uint32_t;
  std::unordered_map<Mask, BlockTour> tours;
  auto tour_of = [&](Mask set) -> const BlockTour& {
    auto it = tours.find(set);
    if (it != tours.end()) return it->second;
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v)
      if (set >> v & 1u) s.push_back(v);
    return tours.emplace(set, best_k_tour_on_set(g, s, kind)).first->second;
  };

  const Mask full = (Mask{1} << n) - 1;
  std::vector<Weight> memo(std::size_t{1} << n, -1);
  std::vector<Mask> choice(std::size_t{1} << n, 0);
  memo[0] = 0;

  std::function<Weight(Mask)> solve = [&](Mask rest) -> Weight {
    if (memo[rest] >= 0) return memo[rest];
    const int anchor = std::countr_zero(rest);
    std::vector<Vertex> others;
    for (Vertex v = anchor + 1; v < n; ++v)
      if (rest >> v & 1u) others.push_back(v);
    Weight best = -1;
    Mask best_set = 0;
    // Choose k-1 companions for the anchor, in lexicographic order.
    std::vector<int> idx(k - 1);
    std::function<void(int, int, Mask)> pick = [&](int depth, int from, Mask set) {
      if (depth == k - 1) {
        const Weight w = tour_of(set).weight + solve(rest & ~set);
        if (w > best) {
          best = w;
          best_set = set;
        }
        return;
      }
      const int need = k - 1 - depth;
      for (int i = from; i + need <= static_cast<int>(others.size()); ++i)
        pick(depth + 1, i + 1, set | Mask{1} << others[i]);
    };
    pick(0, 0, Mask{1} << anchor);
    memo[rest] = best;
    choice[rest] = best_set;
    return best;
  };

  OptimalPacking out;
  out.kind = kind;
  out.k = k;
  out.weight = solve(full);
  for (Mask rest = full; rest != 0; rest &= ~choice[rest]) out.blocks.push_back(tour_of(choice[rest]).order);
  return out;
}

}  // namespace kpack
