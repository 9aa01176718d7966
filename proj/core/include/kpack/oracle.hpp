#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kpack/graph.hpp"

namespace kpack {

/// Limit on the number of distinct orders enumerated for one vertex set.
inline constexpr std::uint64_t kTourOrderCap = 50'000'000;

struct BlockTour {
  std::vector<Vertex> order;
  Weight weight = 0;
};

/// Heaviest k-cycle (or k-path) through exactly the vertices of S, by
/// enumerating k!/(2k) cycle orders (k!/2 path orders).
BlockTour best_k_tour_on_set(const WeightedCompleteGraph& g, std::span<const Vertex> S,
                             PackingKind kind, std::uint64_t cap = kTourOrderCap);

/// Largest n accepted by optimal_k_packing by default: 15 for k = 3 and 5, 16 otherwise.
int default_oracle_cap(int k);

struct OptimalPacking {
  PackingKind kind = PackingKind::cycle;
  int k = 0;
  std::vector<std::vector<Vertex>> blocks;
  Weight weight = 0;
};

/// Exact optimum by memoized DP over vertex subsets; each block is anchored at
/// the smallest uncovered vertex.
OptimalPacking optimal_k_packing(const WeightedCompleteGraph& g, int k, PackingKind kind,
                                 std::optional<int> max_n = std::nullopt);

}  // namespace kpack
