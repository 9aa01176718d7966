#include "kpack/fixtures.hpp"

#include <utility>

#include "kpack/matching.hpp"
#include "kpack/oracle.hpp"

namespace kpack {

namespace {

struct FixtureName {
  FixtureId id;
  std::string_view name;
  std::string_view short_name;
};

constexpr FixtureName kFixtureNames[] = {
    {FixtureId::fig2_5cp, "fig2_5cp", "fig2"},
    {FixtureId::fig3_general4cp, "fig3_general4cp", "fig3"},
    {FixtureId::fig4_general4pp, "fig4_general4pp", "fig4"},
    {FixtureId::fig5_metric4cp, "fig5_metric4cp", "fig5"},
    {FixtureId::fig3_lifted_12, "fig3_lifted_12", "fig3_lifted"},
};

// 1-indexed labels to vertices.
Edge ve(int a, int b) { return Edge(a - 1, b - 1); }

Vertex grid(int i, int j) { return 5 * (i - 1) + (j - 1); }

void set_all(WeightedCompleteGraph& g, Weight w) {
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = u + 1; v < g.size(); ++v) g.set(u, v, w);
}

Matching consecutive_pairs(int n) {
  Matching m;
  for (int i = 1; i < n; i += 2) m.edges.push_back(ve(i, i + 1));
  return m;
}

WeightedCompleteGraph fig3_graph(Weight base) {
  WeightedCompleteGraph g(12, base == 0 ? WeightClass::zero_one : WeightClass::one_two);
  set_all(g, base);
  for (int i = 1; i <= 12; ++i) {
    const Edge e = ve(i, i % 12 + 1);
    g.set(e.u, e.v, base + 1);
  }
  for (auto [a, b] : {std::pair{1, 6}, {7, 12}, {2, 9}, {3, 8}, {4, 11}, {5, 10}}) {
    const Edge e = ve(a, b);
    g.set(e.u, e.v, base + 1);
  }
  return g;
}

Fixture fig2() {
  Fixture f;
  f.id = FixtureId::fig2_5cp;
  f.graph = WeightedCompleteGraph(25, WeightClass::metric);
  set_all(f.graph, 1);
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) f.graph.set(grid(i, j), grid(i, j % 5 + 1), 2);
  f.k = 5;
  f.kind = PackingKind::cycle;
  f.algorithm = Algorithm::alg3;
  EdgeGroupPlan plan;
  for (int i = 1; i <= 5; ++i) {
    const int next = i % 5 + 1;
    plan.groups.push_back({Edge(grid(i, 1), grid(i, 2)), Edge(grid(next, 3), grid(next, 4))});
    plan.isolated.push_back({grid((i + 1) % 5 + 1, 5)});
  }
  f.plan_override = plan;
  for (int i = 1; i <= 5; ++i) {
    std::vector<Vertex> row;
    for (int j = 1; j <= 5; ++j) row.push_back(grid(i, j));
    f.optimal_blocks.push_back(row);
  }
  f.expected_opt = 50;
  f.expected_algorithm = 35;
  f.expected_matching = 20;
  f.expected_ratio = Ratio(7, 10);
  return f;
}

Fixture fig3(bool lifted) {
  Fixture f;
  f.id = lifted ? FixtureId::fig3_lifted_12 : FixtureId::fig3_general4cp;
  f.graph = fig3_graph(lifted ? 1 : 0);
  if (!lifted) f.graph.set_class_tag(WeightClass::general);
  f.k = 4;
  f.kind = PackingKind::cycle;
  f.algorithm = lifted ? Algorithm::alg7 : Algorithm::alg6;
  f.matching_override = consecutive_pairs(12);
  f.optimal_blocks = {{1, 2, 7, 8}, {3, 4, 9, 10}, {5, 6, 11, 0}};
  f.expected_opt = lifted ? 24 : 12;
  f.expected_algorithm = lifted ? 21 : 9;
  f.expected_matching = lifted ? 12 : 6;
  f.expected_ratio = lifted ? Ratio(7, 8) : Ratio(3, 4);
  return f;
}

Fixture fig4() {
  Fixture f;
  f.id = FixtureId::fig4_general4pp;
  f.graph = WeightedCompleteGraph(16, WeightClass::general);
  for (auto [a, b] : {std::pair{15, 16}, {16, 1}, {2, 3}, {3, 4}, {7, 8}, {8, 9}, {10, 11}, {11, 12}}) {
    const Edge e = ve(a, b);
    f.graph.set(e.u, e.v, 1);
  }
  f.k = 4;
  f.kind = PackingKind::path;
  f.algorithm = Algorithm::general4pp;
  f.matching_override = consecutive_pairs(16);
  f.optimal_blocks = {{14, 15, 0, 4}, {1, 2, 3, 5}, {6, 7, 8, 12}, {9, 10, 11, 13}};
  f.expected_opt = 8;
  f.expected_algorithm = 6;
  f.expected_matching = 4;
  f.expected_ratio = Ratio(3, 4);
  return f;
}

Fixture fig5() {
  Fixture f;
  f.id = FixtureId::fig5_metric4cp;
  f.graph = WeightedCompleteGraph(8, WeightClass::metric);
  const std::pair<Weight, std::vector<std::pair<int, int>>> colors[] = {
      {4, {{1, 2}, {5, 6}}},
      {3, {{2, 3}, {4, 5}, {1, 8}, {6, 7}, {1, 7}, {2, 4}, {6, 8}, {3, 5}}},
      {1, {{1, 3}, {1, 4}, {2, 8}, {2, 7}, {3, 6}, {4, 6}, {5, 8}, {5, 7}}},
      {2, {{7, 8}, {3, 4}, {1, 6}, {1, 5}, {2, 6}, {2, 5}, {3, 8}, {4, 8}, {3, 7}, {4, 7}}},
  };
  for (const auto& [w, edges] : colors)
    for (auto [a, b] : edges) {
      const Edge e = ve(a, b);
      f.graph.set(e.u, e.v, w);
    }
  f.k = 4;
  f.kind = PackingKind::cycle;
  f.algorithm = Algorithm::alg7;
  f.matching_override = consecutive_pairs(8);
  f.optimal_blocks = {{1, 2, 4, 3}, {5, 6, 0, 7}};
  f.expected_opt = 24;
  f.expected_algorithm = 20;
  f.expected_matching = 12;
  f.expected_ratio = Ratio(5, 6);
  return f;
}

FixtureCheck check(std::string name, const std::string& expected, const std::string& actual) {
  return FixtureCheck{std::move(name), expected, actual, expected == actual};
}

FixtureCheck check(std::string name, Weight expected, Weight actual) {
  return check(std::move(name), std::to_string(expected), std::to_string(actual));
}

}  // namespace

std::string_view to_string(FixtureId id) {
  for (const auto& f : kFixtureNames)
    if (f.id == id) return f.name;
  return "?";
}

std::optional<FixtureId> try_parse_fixture_id(std::string_view text) {
  for (const auto& f : kFixtureNames)
    if (f.name == text || f.short_name == text) return f.id;
  return std::nullopt;
}

FixtureId parse_fixture_id(std::string_view text) {
  if (auto id = try_parse_fixture_id(text)) return *id;
  throw Error("unknown fixture '" + std::string(text) + "'");
}

const std::vector<FixtureId>& all_fixtures() {
  static const std::vector<FixtureId> all = [] {
    std::vector<FixtureId> v;
    for (const auto& f : kFixtureNames) v.push_back(f.id);
    return v;
  }();
  return all;
}

Fixture build_fixture(FixtureId id) {
  switch (id) {
    case FixtureId::fig2_5cp:
      return fig2();
    case FixtureId::fig3_general4cp:
      return fig3(false);
    case FixtureId::fig4_general4pp:
      return fig4();
    case FixtureId::fig5_metric4cp:
      return fig5();
    case FixtureId::fig3_lifted_12:
      return fig3(true);
  }
  throw Error("unknown fixture");
}

RunRequest fixture_request(const Fixture& f) {
  RunRequest req;
  req.algorithm = f.algorithm;
  req.k = f.k;
  req.matching_override = f.matching_override;
  req.plan_override = f.plan_override;
  return req;
}

CertifiedOptimum certified_optimum(const Fixture& f) {
  const WeightedCompleteGraph& g = f.graph;
  CertifiedOptimum out;
  if (g.size() <= default_oracle_cap(f.k)) {
    out.weight = optimal_k_packing(g, f.k, f.kind).weight;
    return out;
  }
  Weight rows = 0;
  for (std::size_t i = 0; i < f.optimal_blocks.size(); ++i) {
    const Weight best = best_k_tour_on_set(g, f.optimal_blocks[i], f.kind).weight;
    out.checks.push_back(check("row " + std::to_string(i + 1) + " best cycle", 10, best));
    rows += best;
  }
  const Weight edges = f.kind == PackingKind::cycle ? g.size() : g.size() - g.size() / f.k;
  out.checks.push_back(check("edge-count upper bound", rows, edges * g.max_weight()));
  if (!out.checks.back().pass)
    throw Error("row argument does not certify the optimum of " + std::string(to_string(f.id)));
  out.weight = rows;
  return out;
}

std::vector<FixtureCheck> verify_fixture(const Fixture& f) {
  std::vector<FixtureCheck> out;
  const WeightedCompleteGraph& g = f.graph;

  const WeightClass tag = g.class_tag();
  out.push_back(check("class " + std::string(to_string(tag)), "true",
                      satisfies_class(g, tag) ? "true" : "false"));

  if (f.plan_override) {
    const int m = (f.k - 1) / 2;
    const Matching mp = max_weight_matching_of_size(g, g.size() / f.k * m);
    out.push_back(check("max matching of size p", f.expected_matching, matching_weight(g, mp)));
  } else {
    out.push_back(check("max perfect matching", f.expected_matching,
                        matching_weight(g, max_weight_perfect_matching(g))));
  }

  out.push_back(check("optimal packing witness", f.expected_opt,
                      packing_weight(g, f.optimal_blocks, f.k, f.kind)));

  const CertifiedOptimum cert = certified_optimum(f);
  out.insert(out.end(), cert.checks.begin(), cert.checks.end());
  const Weight opt = cert.weight;
  out.push_back(check("OPT", f.expected_opt, opt));

  const AlgorithmRun run = run_algorithm(g, fixture_request(f));
  out.push_back(check(std::string(to_string(f.algorithm)) + " weight", f.expected_algorithm, run.weight));
  const Ratio ratio = opt == 0 ? Ratio(1) : Ratio(run.weight, opt);
  out.push_back(check("ratio", format_ratio(f.expected_ratio), format_ratio(ratio)));
  bool audits = true;
  std::string failed;
  for (const auto& a : run.audits)
    if (!a.holds) {
      audits = false;
      failed += (failed.empty() ? "" : ",") + a.name;
    }
  out.push_back(check("lemma audits", "all hold", audits ? "all hold" : "failed: " + failed));
  return out;
}

}  // namespace kpack
