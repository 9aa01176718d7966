#include "kpack/edge_groups.hpp"

#include <algorithm>

#include "kpack/matching.hpp"

namespace kpack {

std::vector<Edge> order_group(const WeightedCompleteGraph& g, std::vector<Edge> group) {
  std::stable_sort(group.begin(), group.end(),
                   [&](const Edge& a, const Edge& b) { return g(a.u, a.v) > g(b.u, b.v); });
  if (group.size() >= 3) {
    // [e1, e2, e3, ..., em] -> [e1, e3, ..., em, e2]
    std::rotate(group.begin() + 1, group.begin() + 2, group.end());
  }
  return group;
}

EdgeGroupPlan default_edge_group_plan(const WeightedCompleteGraph& g, const Matching& m,
                                      int groups, int isolated_per_group) {
  EdgeGroupPlan plan;
  plan.groups.resize(groups);
  plan.isolated.resize(groups);
  std::vector<Edge> edges = normalized(m).edges;
  std::stable_sort(edges.begin(), edges.end(),
                   [&](const Edge& a, const Edge& b) { return g(a.u, a.v) > g(b.u, b.v); });
  for (std::size_t i = 0; i < edges.size(); ++i) plan.groups[i % groups].push_back(edges[i]);

  std::vector<char> covered(g.size(), 0);
  for (const Edge& e : edges) covered[e.u] = covered[e.v] = 1;
  std::vector<Vertex> free;
  for (Vertex v = 0; v < g.size(); ++v)
    if (!covered[v]) free.push_back(v);
  if (static_cast<int>(free.size()) != groups * isolated_per_group)
    throw Error("internal: isolated vertex count does not match the group count");
  for (int i = 0; i < groups; ++i)
    for (int j = 0; j < isolated_per_group; ++j)
      plan.isolated[i].push_back(free[i * isolated_per_group + j]);
  return plan;
}

namespace {

std::pair<Vertex, Vertex> oriented_edge(const Edge& e, int bit) {
  return bit ? std::pair{e.v, e.u} : std::pair{e.u, e.v};
}

Orientation orientation_from_mask(const std::vector<Edge>& ordered, std::uint32_t mask) {
  Orientation o;
  for (std::size_t i = 0; i < ordered.size(); ++i)
    o.push_back(oriented_edge(ordered[i], static_cast<int>((mask >> i) & 1u)));
  return o;
}

}  // namespace

std::vector<Vertex> chain_block(const Orientation& oriented, std::span<const Vertex> isolated,
                                PackingKind kind) {
  std::vector<Vertex> block;
  block.push_back(isolated[0]);
  for (const auto& [t, h] : oriented) {
    block.push_back(t);
    block.push_back(h);
  }
  if (kind == PackingKind::path) block.push_back(isolated[1]);
  return block;
}

Weight expected_block_weight_x4(const WeightedCompleteGraph& g, const std::vector<Edge>& ordered,
                                std::span<const Vertex> isolated, PackingKind kind,
                                const std::vector<int>& fixed) {
  const int m = static_cast<int>(ordered.size());
  const Vertex start = isolated[0];
  const Vertex end = kind == PackingKind::cycle ? isolated[0] : isolated[1];
  auto tail = [&](int i, int bit) { return oriented_edge(ordered[i], bit).first; };
  auto head = [&](int i, int bit) { return oriented_edge(ordered[i], bit).second; };

  Weight total = 0;
  for (const Edge& e : ordered) total += 4 * g(e.u, e.v);
  if (m == 0) return total + 4 * g(start, end);

  // Terms touching one edge: w(start, t_1) and w(h_m, end).
  auto single = [&](int i, auto value) {
    if (fixed[i] >= 0) return 4 * value(fixed[i]);
    return 2 * (value(0) + value(1));
  };
  total += single(0, [&](int b) { return g(start, tail(0, b)); });
  total += single(m - 1, [&](int b) { return g(head(m - 1, b), end); });

  // Connector terms w(h_i, t_{i+1}).
  for (int i = 0; i + 1 < m; ++i) {
    Weight sum = 0;
    int free_vars = 0;
    for (int bi = 0; bi < 2; ++bi) {
      if (fixed[i] >= 0 && fixed[i] != bi) continue;
      for (int bj = 0; bj < 2; ++bj) {
        if (fixed[i + 1] >= 0 && fixed[i + 1] != bj) continue;
        sum += g(head(i, bi), tail(i + 1, bj));
      }
    }
    free_vars = (fixed[i] < 0) + (fixed[i + 1] < 0);
    total += sum * (4 >> free_vars);
  }
  return total;
}

Orientation orient_group(const WeightedCompleteGraph& g, const std::vector<Edge>& ordered,
                         std::span<const Vertex> isolated, PackingKind kind,
                         OrientationSearch search) {
  const int m = static_cast<int>(ordered.size());
  if (search == OrientationSearch::automatic)
    search = m <= kExhaustiveOrientationLimit ? OrientationSearch::exhaustive
                                              : OrientationSearch::conditional_expectation;
  if (search == OrientationSearch::exhaustive && m > 24)
    throw Error("exhaustive orientation search limited to 24 edges per group");

  if (search == OrientationSearch::exhaustive) {
    std::uint32_t best_mask = 0;
    Weight best = -1;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
      const Weight w =
          block_weight(g, chain_block(orientation_from_mask(ordered, mask), isolated, kind), kind);
      if (w > best) {
        best = w;
        best_mask = mask;
      }
    }
    return orientation_from_mask(ordered, best_mask);
  }

  // Method of conditional expectations: fix one edge at a time, keeping the
  // orientation whose conditional expectation is larger (ties keep (u, v)).
  std::vector<int> fixed(m, -1);
  for (int i = 0; i < m; ++i) {
    fixed[i] = 0;
    const Weight keep = expected_block_weight_x4(g, ordered, isolated, kind, fixed);
    fixed[i] = 1;
    const Weight flip = expected_block_weight_x4(g, ordered, isolated, kind, fixed);
    fixed[i] = flip > keep ? 1 : 0;
  }
  Orientation o;
  for (int i = 0; i < m; ++i) o.push_back(oriented_edge(ordered[i], fixed[i]));
  return o;
}

namespace {

void check_plan(const WeightedCompleteGraph& g, const EdgeGroupPlan& plan, int groups, int m,
                int isolated_per_group, Weight optimum) {
  if (static_cast<int>(plan.groups.size()) != groups ||
      static_cast<int>(plan.isolated.size()) != groups)
    throw Error("plan inconsistent with M*_p: expected " + std::to_string(groups) + " groups");
  std::vector<char> seen(g.size(), 0);
  auto mark = [&](Vertex v) {
    if (v < 0 || v >= g.size()) throw Error("plan inconsistent with M*_p: vertex out of range");
    if (seen[v]) throw Error("plan inconsistent with M*_p: vertex " + std::to_string(v) + " reused");
    seen[v] = 1;
  };
  Weight total = 0;
  for (int i = 0; i < groups; ++i) {
    if (static_cast<int>(plan.groups[i].size()) != m)
      throw Error("plan inconsistent with M*_p: group " + std::to_string(i) + " needs " +
                  std::to_string(m) + " edges");
    if (static_cast<int>(plan.isolated[i].size()) != isolated_per_group)
      throw Error("plan inconsistent with M*_p: group " + std::to_string(i) + " needs " +
                  std::to_string(isolated_per_group) + " isolated vertices");
    for (const Edge& e : plan.groups[i]) {
      mark(e.u);
      mark(e.v);
      total += g(e.u, e.v);
    }
    for (Vertex v : plan.isolated[i]) mark(v);
  }
  if (total != optimum)
    throw Error("plan inconsistent with M*_p: plan matching weighs " + std::to_string(total) +
                ", maximum is " + std::to_string(optimum));
}

}  // namespace

GroupedConstruction build_grouped(const WeightedCompleteGraph& g, int k, PackingKind kind,
                                  const std::optional<EdgeGroupPlan>& plan,
                                  OrientationSearch search) {
  const int n = g.size();
  if (n % k != 0) throw Error("n not divisible by k");
  const int groups = n / k;
  const int m = kind == PackingKind::cycle ? (k - 1) / 2 : (k - 2) / 2;
  const int isolated_per_group = kind == PackingKind::cycle ? 1 : 2;
  const int p = groups * m;

  GroupedConstruction out;
  const Matching best = max_weight_matching_of_size(g, p);
  if (plan) {
    check_plan(g, *plan, groups, m, isolated_per_group, matching_weight(g, best));
    out.plan = *plan;
    for (const auto& grp : plan->groups)
      out.matching.edges.insert(out.matching.edges.end(), grp.begin(), grp.end());
    out.matching = normalized(std::move(out.matching));
  } else {
    out.matching = best;
    out.plan = default_edge_group_plan(g, best, groups, isolated_per_group);
  }

  for (int i = 0; i < groups; ++i) {
    auto& grp = out.plan.groups[i];
    grp = order_group(g, grp);
    const auto& iso = out.plan.isolated[i];
    auto block = chain_block(orient_group(g, grp, iso, kind, search), iso, kind);
    Weight gw = 0;
    for (const Edge& e : grp) gw += g(e.u, e.v);
    out.group_weights.push_back(gw);
    out.block_weights.push_back(block_weight(g, block, kind));
    out.blocks.push_back(std::move(block));
  }
  return out;
}

}  // namespace kpack
