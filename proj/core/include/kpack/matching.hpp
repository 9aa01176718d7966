#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kpack/graph.hpp"

namespace kpack {

struct WeightedEdge {
  Vertex u = 0;
  Vertex v = 0;
  Weight w = 0;
};

/// General-graph maximum-weight matching (Edmonds' blossom algorithm with
/// primal-dual updates, O(n^3)). With max_cardinality set, returns a
/// maximum-weight matching among those of maximum cardinality. Returns mate[v]
/// or -1 for every vertex.
std::vector<Vertex> maximum_weight_matching(int n, std::span<const WeightedEdge> edges,
                                            bool max_cardinality);

/// Requires even n.
Matching max_weight_perfect_matching(const WeightedCompleteGraph& g);

/// Maximum weight over matchings of exactly p edges. Uses auxiliary vertices
/// joined to every real vertex by a weight exceeding all real weights combined.
Matching max_weight_matching_of_size(const WeightedCompleteGraph& g, int p);

inline constexpr std::uint64_t kBruteForceMatchingCap = 20'000'000;

/// Exhaustive search over all matchings of exactly p edges.
Matching brute_force_matching(const WeightedCompleteGraph& g, int p,
                              std::uint64_t cap = kBruteForceMatchingCap);

/// Number of matchings of exactly p edges in K_n, saturating at UINT64_MAX.
std::uint64_t count_matchings(int n, int p);

/// Edges sorted, each normalized with u < v.
Matching normalized(Matching m);

}  // namespace kpack
