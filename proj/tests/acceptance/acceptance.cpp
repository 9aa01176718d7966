#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "kpack/audit.hpp"
#include "kpack/fixtures.hpp"
#include "kpack/matching.hpp"
#include "kpack/oracle.hpp"

using namespace kpack;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Line {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void report(int id, const std::string& title, Line& line) {
  std::cout << (line.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << line.detail.str() << "\n";
  if (!line.pass) ++failures;
}

void fixture_criterion(int id, const std::string& title, FixtureId fid, double limit) {
  Line line;
  const auto t0 = Clock::now();
  try {
    const auto f = build_fixture(fid);
    const auto checks = verify_fixture(f);
    for (const auto& c : checks) line.require(c.pass, c.name + " expected " + c.expected + " got " + c.actual);
    const auto opt = certified_optimum(f);
    auto reports = audit_instance(f.graph, {fixture_request(f)}, std::string(to_string(fid)),
                                  {std::nullopt, f.kind, f.k, opt.weight});
    const auto& r = reports.at(0);
    line.require(r.all_hold(), "audits");
    line.require(r.oracle_weight == f.expected_opt, "OPT");
    line.require(r.algorithm_weight == f.expected_algorithm, "algorithm weight");
    line.require(r.ratio == f.expected_ratio, "ratio");
    const double dt = seconds_since(t0);
    line.require(dt < limit, "time limit");
    line.detail << " OPT=" << r.oracle_weight << " ALG=" << r.algorithm_weight << " ratio=" << format_ratio(r.ratio);
    char buf[32];
    std::snprintf(buf, sizeof buf, " %.3fs", dt);
    line.detail << buf;
  } catch (const std::exception& e) {
    line.require(false, e.what());
  }
  report(id, title, line);
}

struct Suite {
  std::string name;
  Algorithm algorithm;
  int k;
  int n;
  WeightClass cls;
  Distribution dist;
  Ratio bound;
  int count = 200;
};

struct SuiteOutcome {
  bool ratios_ok = true;
  bool audits_ok = true;
  int instances = 0;
  Ratio min_ratio{1};
  std::vector<std::string> failed_audits;
};

SuiteOutcome run_suite(const Suite& s) {
  SuiteOutcome out;
  RunRequest req;
  req.algorithm = s.algorithm;
  req.k = s.k;
  req.tsp = TspSolverKind::exact;
  for (int i = 0; i < s.count; ++i) {
    InstanceSpec spec;
    spec.n = s.n;
    spec.weight_class = s.cls;
    spec.distribution = s.dist;
    spec.seed = 1000003ULL * static_cast<std::uint64_t>(s.k) + 7919ULL * static_cast<std::uint64_t>(s.n) +
                static_cast<std::uint64_t>(i);
    const auto g = generate_instance(spec);
    auto reports = audit_instance(g, {req}, s.name + "#" + std::to_string(i));
    const auto& r = reports.at(0);
    ++out.instances;
    if (r.ratio < out.min_ratio) out.min_ratio = r.ratio;
    if (r.ratio < s.bound) out.ratios_ok = false;
    for (const auto& a : r.audits)
      if (!a.holds) {
        out.audits_ok = false;
        if (out.failed_audits.size() < 5) out.failed_audits.push_back(r.instance_id + ":" + a.name);
      }
  }
  return out;
}

}  // namespace

int main() {
  fixture_criterion(1, "fig3 general 4-cycle packing, OPT 12, ALG 9, ratio 3/4", FixtureId::fig3_general4cp, 1.0);
  fixture_criterion(2, "fig5 metric 4-cycle packing, M* 12, OPT 24, ALG 20, ratio 5/6", FixtureId::fig5_metric4cp,
                    1.0);
  fixture_criterion(3, "fig4 general 4-path packing, OPT 8, ALG 6, ratio 3/4", FixtureId::fig4_general4pp, 10.0);
  fixture_criterion(4, "fig2 metric 5-cycle packing, M*_10 20, ALG 35, OPT 50, ratio 7/10", FixtureId::fig2_5cp,
                    5.0);

  const std::vector<Suite> suites = {
      {"metric-k5-n10-alg3", Algorithm::alg3, 5, 10, WeightClass::metric, Distribution::euclidean, Ratio(7, 10)},
      {"metric-k6-n12-alg2", Algorithm::alg2, 6, 12, WeightClass::metric, Distribution::euclidean, Ratio(91, 120)},
      {"metric-k7-n14-alg1", Algorithm::alg1, 7, 14, WeightClass::metric, Distribution::euclidean,
       (Ratio(7, 8) - Ratio(1, 56)) * Ratio(6, 7)},
      {"metric-k6-n12-kpp-combined", Algorithm::kpp_combined, 6, 12, WeightClass::metric, Distribution::euclidean,
       Ratio(175, 228)},
      {"general-k4-n8-alg6", Algorithm::alg6, 4, 8, WeightClass::general, Distribution::uniform, Ratio(3, 4)},
      {"general-k4-n12-alg6", Algorithm::alg6, 4, 12, WeightClass::general, Distribution::uniform, Ratio(3, 4)},
      {"metric-k4-n8-alg7", Algorithm::alg7, 4, 8, WeightClass::metric, Distribution::euclidean, Ratio(5, 6)},
      {"metric-k4-n12-alg7", Algorithm::alg7, 4, 12, WeightClass::metric, Distribution::closure, Ratio(5, 6)},
      {"one_two-k4-n8-alg7", Algorithm::alg7, 4, 8, WeightClass::one_two, Distribution::uniform, Ratio(7, 8)},
      {"one_two-k4-n12-alg7", Algorithm::alg7, 4, 12, WeightClass::one_two, Distribution::uniform, Ratio(7, 8)},
      {"metric-k4-n8-alg8", Algorithm::alg8, 4, 8, WeightClass::metric, Distribution::euclidean, Ratio(14, 17)},
      {"metric-k4-n12-alg8", Algorithm::alg8, 4, 12, WeightClass::metric, Distribution::closure, Ratio(14, 17)},
      {"one_two-k3-n9-3cp911", Algorithm::cp911, 3, 9, WeightClass::one_two, Distribution::uniform, Ratio(9, 11)},
      {"one_two-k3-n12-3cp911", Algorithm::cp911, 3, 12, WeightClass::one_two, Distribution::uniform, Ratio(9, 11)},
  };

  Line ratios;
  Line audits;
  const auto t0 = Clock::now();
  int total = 0;
  for (const auto& s : suites) {
    const auto ts = Clock::now();
    SuiteOutcome o;
    try {
      o = run_suite(s);
    } catch (const std::exception& e) {
      o.ratios_ok = o.audits_ok = false;
      o.failed_audits.push_back(e.what());
    }
    total += o.instances;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2fs", seconds_since(ts));
    std::cout << "  suite " << s.name << ": " << o.instances << " instances, min ratio " << format_ratio(o.min_ratio)
              << " (" << to_double(o.min_ratio) << ") bound " << format_ratio(s.bound) << ", audits "
              << (o.audits_ok ? "ok" : "FAILED") << ", " << buf << "\n";
    ratios.require(o.ratios_ok && o.instances >= 200, s.name);
    audits.require(o.audits_ok, s.name);
    for (const auto& f : o.failed_audits) std::cout << "    audit failure " << f << "\n";
  }
  const double dt = seconds_since(t0);
  ratios.require(dt < 300.0, "total time");
  char buf[64];
  std::snprintf(buf, sizeof buf, " %d instances in %.1fs", total, dt);
  ratios.detail << buf;
  audits.detail << " " << suites.size() << " suites";
  report(5, "ratio suites against the exact oracle", ratios);
  report(6, "lemma-level audits on every suite instance", audits);

  Line diff;
  int instances = 0;
  int comparisons = 0;
  try {
    for (std::uint64_t seed = 0; instances < 100; ++seed) {
      InstanceSpec spec;
      spec.n = 3 + static_cast<int>(seed % 10);
      spec.weight_class = seed % 4 == 0 ? WeightClass::zero_one : WeightClass::general;
      spec.seed = 424242 + seed;
      const auto g = generate_instance(spec);
      for (int p = 0; 2 * p <= g.size(); ++p) {
        const Weight fast = matching_weight(g, max_weight_matching_of_size(g, p));
        const Weight slow = matching_weight(g, brute_force_matching(g, p));
        diff.require(fast == slow, "seed " + std::to_string(seed) + " p " + std::to_string(p));
        ++comparisons;
      }
      ++instances;
    }
  } catch (const std::exception& e) {
    diff.require(false, e.what());
  }
  diff.detail << " " << instances << " instances, " << comparisons << " (instance, p) pairs";
  report(7, "size-p matching equals brute force", diff);

  Line tables;
  tables.require(ratios.pass && audits.pass, "criteria 5-6");
  tables.detail << " guarantees checked as lower bounds by criteria 5-6";
  report(8, "ratio guarantee tables", tables);

  return failures == 0 ? 0 : 1;
}
