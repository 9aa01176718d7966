#include "kpack/audit.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "kpack/cycle_packing.hpp"
#include "kpack/matching.hpp"
#include "kpack/oracle.hpp"
#include "kpack/path_packing.hpp"
#include "kpack/reductions.hpp"

namespace kpack {

namespace {

struct AlgorithmName {
  Algorithm algorithm;
  std::string_view name;
};

constexpr AlgorithmName kNames[] = {
    {Algorithm::alg1, "alg1"},
    {Algorithm::alg2, "alg2"},
    {Algorithm::alg3, "alg3"},
    {Algorithm::alg4, "alg4"},
    {Algorithm::alg5, "alg5"},
    {Algorithm::kpp_combined, "kpp-combined"},
    {Algorithm::alg6, "alg6"},
    {Algorithm::alg7, "alg7"},
    {Algorithm::alg8, "alg8"},
    {Algorithm::general4pp, "general4pp"},
    {Algorithm::reduce12, "reduce12"},
    {Algorithm::cp911, "3cp911"},
};

std::string indexed(std::string_view base, std::size_t i) {
  return std::string(base) + "[" + std::to_string(i) + "]";
}

}  // namespace

std::string_view to_string(Algorithm a) {
  for (const auto& n : kNames)
    if (n.algorithm == a) return n.name;
  return "?";
}

Algorithm parse_algorithm(std::string_view text) {
  for (const auto& n : kNames)
    if (n.name == text) return n.algorithm;
  throw Error("unknown algorithm '" + std::string(text) + "'");
}

const std::vector<Algorithm>& all_algorithms() {
  static const std::vector<Algorithm> all = [] {
    std::vector<Algorithm> v;
    for (const auto& n : kNames) v.push_back(n.algorithm);
    return v;
  }();
  return all;
}

PackingKind output_kind(const RunRequest& request) {
  switch (request.algorithm) {
    case Algorithm::alg1:
    case Algorithm::alg2:
    case Algorithm::alg3:
    case Algorithm::alg6:
    case Algorithm::alg7:
    case Algorithm::cp911:
      return PackingKind::cycle;
    case Algorithm::reduce12:
      return request.reduce_kind;
    default:
      return PackingKind::path;
  }
}

AuditEntry make_audit(std::string name, Ratio lhs, Ratio rhs, std::string relation) {
  AuditEntry e;
  e.name = std::move(name);
  e.lhs = lhs;
  e.rhs = rhs;
  e.relation = std::move(relation);
  e.holds = e.relation == "==" ? lhs == rhs : lhs >= rhs;
  return e;
}

std::string format_ratio(const Ratio& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Ratio& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

bool RatioReport::all_hold() const {
  return std::all_of(audits.begin(), audits.end(), [](const AuditEntry& e) { return e.holds; });
}

namespace {

void require_k(const RunRequest& req, int expected) {
  if (req.k != expected)
    throw Error(std::string(to_string(req.algorithm)) + " needs k=" + std::to_string(expected));
}

void offset_audits(std::vector<AuditEntry>& out, std::string_view prefix, const TspRun& tsp, int k,
                   const WeightedCompleteGraph& g, SplitObjective objective) {
  const Ratio h(tsp.tour_weight);
  if (objective == SplitObjective::plain) {
    out.push_back(make_audit(std::string(prefix) + "offset_plain",
                             packing_weight(g, tsp.split.paths), Ratio(k - 1, k) * h));
  } else {
    out.push_back(make_audit(std::string(prefix) + "offset_alg2", tsp.split.objective,
                             Ratio((k - 1) * (k - 1) + 1, k) * h));
  }
}

void grouped_audits(std::vector<AuditEntry>& out, std::string_view name,
                    const GroupedConstruction& c, int m) {
  for (std::size_t i = 0; i < c.blocks.size(); ++i)
    out.push_back(make_audit(indexed(name, i), c.block_weights[i],
                             Ratio(3 * m + 1, 2 * m) * Ratio(c.group_weights[i])));
}

void general4_audits(std::vector<AuditEntry>& out, const General4Result& r) {
  out.push_back(make_audit("alg6.cycles_ge_matching", r.cycle_weight, r.base_weight));
  out.push_back(make_audit("alg6.p4_identity", r.path_weight, r.base_weight + r.contracted_weight, "=="));
}

void alg5_audits(std::vector<AuditEntry>& out, std::string_view prefix,
                 const WeightedCompleteGraph& g, const GroupedPathResult& r, int k) {
  grouped_audits(out, std::string(prefix) + "lemma_p4", r.construction, (k - 2) / 2);
  out.push_back(make_audit(std::string(prefix) + "lemma_p4.total", r.weight,
                           Ratio(3 * k - 4, 2 * k - 4) *
                               Ratio(matching_weight(g, r.construction.matching))));
}

void reduction_audits(std::vector<AuditEntry>& out, const WeightedCompleteGraph& g,
                      const ReductionResult& r) {
  const Weight offset = lift_offset(g.size(), r.k, r.kind) * g.denominator();
  out.push_back(make_audit("reduction.identity", r.weight, r.lifted_weight + offset, "=="));
}

}  // namespace

AlgorithmRun run_algorithm(const WeightedCompleteGraph& g, const RunRequest& req) {
  AlgorithmRun run;
  run.request = req;
  run.kind = output_kind(req);
  run.k = req.k;
  const bool metric = is_metric(g).metric;
  const int k = req.k;
  auto& audits = run.audits;

  switch (req.algorithm) {
    case Algorithm::alg1: {
      auto r = alg1_metric_kcp(g, k, make_tsp_solver(req.tsp));
      run.blocks = r.cycles.blocks;
      run.weight = r.weight;
      run.tour_weight = r.tsp.tour_weight;
      offset_audits(audits, "", r.tsp, k, g, SplitObjective::plain);
      audits.push_back(make_audit("alg1.cycles_vs_tour", r.weight, Ratio(k - 1, k) * Ratio(r.tsp.tour_weight)));
      break;
    }
    case Algorithm::alg2: {
      auto r = alg2_metric_kcp_even(g, k, make_tsp_solver(req.tsp));
      run.blocks = r.cycles.blocks;
      run.weight = r.weight;
      run.tour_weight = r.tsp.tour_weight;
      offset_audits(audits, "", r.tsp, k, g, SplitObjective::alg2);
      if (metric) {
        const auto& paths = r.tsp.split.paths.blocks;
        for (std::size_t i = 0; i < paths.size(); ++i) {
          const Weight bound = (k - 2) * path_weight(g, paths[i]) + 2 * tilde_weight(g, paths[i]);
          audits.push_back(make_audit(indexed("lemma_path_cycle", i),
                                      cycle_weight(g, r.cycles.blocks[i]), Ratio(bound, k - 1)));
        }
        audits.push_back(make_audit("alg2.cycles_vs_tour", r.weight,
                                    Ratio(k * k - 2 * k + 2, k * (k - 1)) * Ratio(r.tsp.tour_weight)));
      }
      break;
    }
    case Algorithm::alg3: {
      auto r = alg3_matching_kcp_odd(g, k, req.plan_override);
      run.blocks = r.cycles.blocks;
      run.weight = r.weight;
      if (metric) grouped_audits(audits, "lemma_lb4", r.construction, (k - 1) / 2);
      break;
    }
    case Algorithm::alg4: {
      auto r = alg4_tsp_kpp(g, k, make_tsp_solver(req.tsp));
      run.blocks = r.paths.blocks;
      run.weight = r.weight;
      run.tour_weight = r.tsp.tour_weight;
      offset_audits(audits, "", r.tsp, k, g, SplitObjective::plain);
      break;
    }
    case Algorithm::alg5: {
      auto r = alg5_matching_kpp_even(g, k, req.plan_override);
      run.blocks = r.paths.blocks;
      run.weight = r.weight;
      if (metric) alg5_audits(audits, "", g, r, k);
      break;
    }
    case Algorithm::kpp_combined: {
      auto r = metric_kpp_combined(g, k, make_tsp_solver(req.tsp));
      run.blocks = r.paths.blocks;
      run.weight = r.weight;
      run.tour_weight = r.alg4.tsp.tour_weight;
      offset_audits(audits, "alg4.", r.alg4.tsp, k, g, SplitObjective::plain);
      if (metric) alg5_audits(audits, "alg5.", g, r.alg5, k);
      audits.push_back(make_audit("combined.max", r.weight, std::max(r.alg4.weight, r.alg5.weight), "=="));
      break;
    }
    case Algorithm::alg6:
    case Algorithm::general4pp: {
      require_k(req, 4);
      auto r = alg6_general_4cp(g, req.matching_override);
      const bool cycles = req.algorithm == Algorithm::alg6;
      run.blocks = cycles ? r.cycles.blocks : r.paths.blocks;
      run.weight = cycles ? r.cycle_weight : r.path_weight;
      general4_audits(audits, r);
      break;
    }
    case Algorithm::alg7: {
      require_k(req, 4);
      auto r = alg7_metric_4cp(g, req.matching_override);
      run.blocks = r.cycles.blocks;
      run.weight = r.weight;
      std::set<Edge> used;
      for (const auto& c : r.cycles.blocks)
        for (std::size_t i = 0; i < c.size(); ++i) used.insert(Edge(c[i], c[(i + 1) % c.size()]));
      const auto contained = std::count_if(r.base.edges.begin(), r.base.edges.end(),
                                           [&](const Edge& e) { return used.count(e) > 0; });
      audits.push_back(make_audit("alg7.contains_matching", static_cast<Weight>(contained),
                                  r.base.size(), "=="));
      audits.push_back(make_audit("alg7.identity", r.weight, r.base_weight + r.contracted_weight, "=="));
      break;
    }
    case Algorithm::alg8: {
      require_k(req, 4);
      auto r = alg8_metric_4pp(g, req.matching_override);
      run.blocks = r.paths.blocks;
      run.weight = r.weight;
      general4_audits(audits, r.p4);
      if (metric) {
        audits.push_back(make_audit("lemma_lb9.p4_prime", r.p4_prime_weight,
                                    2 * Ratio(r.quarter_matching_weight)));
        for (std::size_t i = 0; i < r.p4_prime.blocks.size(); ++i) {
          const auto& p = r.p4_prime.blocks[i];
          audits.push_back(make_audit(indexed("lemma_lb9.path", i), path_weight(g, p),
                                      2 * Ratio(g(p[1], p[2]))));
        }
      }
      audits.push_back(make_audit("alg8.max", r.weight, std::max(r.p4.path_weight, r.p4_prime_weight), "=="));
      break;
    }
    case Algorithm::reduce12: {
      auto r = solve_12_via_01(g, exact_plug(req.reduce_kind, k));
      run.blocks = r.blocks;
      run.weight = r.weight;
      reduction_audits(audits, g, r);
      break;
    }
    case Algorithm::cp911: {
      require_k(req, 3);
      auto r = three_cp_9_11(g);
      run.blocks = r.blocks;
      run.weight = r.weight;
      reduction_audits(audits, g, r);
      break;
    }
  }

  const auto bad = validate_packing(g, run.blocks, run.k, run.kind);
  audits.insert(audits.begin(), make_audit("valid_packing", bad ? 0 : 1, 1, "=="));
  return run;
}

std::optional<Ratio> guaranteed_ratio(const WeightedCompleteGraph& g, const RunRequest& req) {
  const int k = req.k;
  const bool metric = is_metric(g).metric;
  const bool one_two = satisfies_class(g, WeightClass::one_two);
  const bool exact = req.tsp == TspSolverKind::exact;
  switch (req.algorithm) {
    case Algorithm::alg1:
      if (!metric || !exact) return std::nullopt;
      return (Ratio(7, 8) - Ratio(1, 8 * k)) * Ratio(k - 1, k);
    case Algorithm::alg2:
      if (!metric || !exact) return std::nullopt;
      return Ratio(7, 8) * Ratio(k * k - 2 * k + 2, k * (k - 1));
    case Algorithm::alg3:
      if (!metric) return std::nullopt;
      return Ratio(3, 4) - Ratio(1, 4 * k);
    case Algorithm::alg4:
      if (!metric || !exact) return std::nullopt;
      return Ratio(7, 8) * Ratio(k - 1, k);
    case Algorithm::alg5:
      return std::nullopt;
    case Algorithm::kpp_combined:
      if (!metric || !exact || k < 6) return std::nullopt;
      return Ratio(27 * k * k - 48 * k + 16, 32 * k * k - 36 * k - 24);
    case Algorithm::alg6:
    case Algorithm::general4pp:
      return Ratio(3, 4);
    case Algorithm::alg7:
      if (one_two) return Ratio(7, 8);
      if (metric) return Ratio(5, 6);
      return std::nullopt;
    case Algorithm::alg8:
      if (!metric) return std::nullopt;
      return Ratio(14, 17);
    case Algorithm::reduce12:
      if (!one_two) return std::nullopt;
      return (Ratio(1) + Ratio(1)) / 2;
    case Algorithm::cp911:
      if (!one_two) return std::nullopt;
      return Ratio(9, 11);
  }
  return std::nullopt;
}

std::vector<RatioReport> audit_instance(const WeightedCompleteGraph& g,
                                        const std::vector<RunRequest>& requests,
                                        const std::string& instance_id,
                                        const AuditOptions& options) {
  const bool metric = is_metric(g).metric;
  std::map<std::pair<int, int>, Weight> optimum;
  auto oracle = [&](PackingKind kind, int k) {
    const auto key = std::pair{static_cast<int>(kind), k};
    if (options.known_kind == kind && options.known_k == k) return options.known_optimum;
    auto it = optimum.find(key);
    if (it == optimum.end())
      it = optimum.emplace(key, optimal_k_packing(g, k, kind, options.oracle_max_n).weight).first;
    return it->second;
  };
  std::optional<Weight> perfect;
  std::optional<Weight> best_tour;

  std::vector<RatioReport> reports;
  for (const auto& req : requests) {
    AlgorithmRun run = run_algorithm(g, req);
    RatioReport rep;
    rep.instance_id = instance_id;
    rep.algorithm = std::string(to_string(req.algorithm));
    rep.kind = run.kind;
    rep.k = run.k;
    rep.algorithm_weight = run.weight;
    rep.oracle_weight = oracle(run.kind, run.k);
    rep.ratio = rep.oracle_weight == 0 ? Ratio(1) : Ratio(run.weight, rep.oracle_weight);
    rep.guaranteed = guaranteed_ratio(g, req);
    rep.blocks = run.blocks;
    rep.audits = std::move(run.audits);

    const Ratio opt(rep.oracle_weight);
    rep.audits.push_back(make_audit("oracle_dominates", opt, run.weight));
    if (rep.guaranteed) rep.audits.push_back(make_audit("ratio_bound", rep.ratio, *rep.guaranteed));

    const int k = run.k;
    if (run.kind == PackingKind::cycle && k % 2 == 0) {
      if (!perfect) perfect = matching_weight(g, max_weight_perfect_matching(g));
      rep.audits.push_back(make_audit("lemma_lb2", *perfect, opt / 2));
    }
    if (metric && g.size() <= kExactTspCap) {
      if (!best_tour) {
        if (run.tour_weight && req.tsp == TspSolverKind::exact)
          best_tour = *run.tour_weight;
        else
          best_tour = tour_weight(g, exact_max_tsp(g));
      }
      if (run.kind == PackingKind::cycle)
        rep.audits.push_back(make_audit("lemma_lb1", *best_tour, Ratio(2 * k - 1, 2 * k) * opt));
      else
        rep.audits.push_back(make_audit("tsp_ge_opt_kpp", *best_tour, opt));
    }
    reports.push_back(std::move(rep));
  }
  return reports;
}

}  // namespace kpack
