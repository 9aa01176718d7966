#pragma once

// Matching-based block construction shared by the odd-k cycle algorithm and
// the even-k path algorithm: split a size-p matching into n/k groups of m
// edges, attach isolated vertices, orient the edges, and chain them.

#include <optional>
#include <utility>
#include <vector>

#include "kpack/graph.hpp"

namespace kpack {

struct EdgeGroupPlan {
  std::vector<std::vector<Edge>> groups;
  /// One isolated vertex per group for cycles, an ordered pair for paths.
  std::vector<std::vector<Vertex>> isolated;
};

enum class OrientationSearch {
  /// Exhaustive for m <= kExhaustiveOrientationLimit, conditional expectations beyond.
  automatic,
  exhaustive,
  conditional_expectation,
};

inline constexpr int kExhaustiveOrientationLimit = 12;

/// Edge order inside a group: heaviest first, second heaviest last, the rest
/// in descending weight between them.
std::vector<Edge> order_group(const WeightedCompleteGraph& g, std::vector<Edge> group);

/// Edges sorted by weight (descending) and dealt round-robin to `groups`
/// groups; isolated vertices handed out in ascending id order.
EdgeGroupPlan default_edge_group_plan(const WeightedCompleteGraph& g, const Matching& m,
                                      int groups, int isolated_per_group);

/// Orientation for each edge of an ordered group: (tail, head).
using Orientation = std::vector<std::pair<Vertex, Vertex>>;

/// The block a t1 h1 ... tm hm (a closes the cycle), or a t1 ... hm b for paths.
std::vector<Vertex> chain_block(const Orientation& oriented, std::span<const Vertex> isolated,
                                PackingKind kind);

/// 4 * E[block weight] when every edge whose entry in `fixed` is -1 is oriented
/// uniformly at random (0 keeps (u, v), 1 swaps it).
Weight expected_block_weight_x4(const WeightedCompleteGraph& g, const std::vector<Edge>& ordered,
                                std::span<const Vertex> isolated, PackingKind kind,
                                const std::vector<int>& fixed);

Orientation orient_group(const WeightedCompleteGraph& g, const std::vector<Edge>& ordered,
                         std::span<const Vertex> isolated, PackingKind kind,
                         OrientationSearch search);

struct GroupedConstruction {
  /// The size-p matching the groups were drawn from.
  Matching matching;
  /// Plan after in-group ordering.
  EdgeGroupPlan plan;
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Weight> group_weights;
  std::vector<Weight> block_weights;
};

/// m = (k-1)/2 edges per group for cycles, (k-2)/2 for paths. A supplied plan
/// must use a maximum-weight matching of size p = (n/k) m.
GroupedConstruction build_grouped(const WeightedCompleteGraph& g, int k, PackingKind kind,
                                  const std::optional<EdgeGroupPlan>& plan,
                                  OrientationSearch search);

}  // namespace kpack
