#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "kpack/audit.hpp"
#include "kpack/fixtures.hpp"
#include "kpack/matching.hpp"
#include "kpack/oracle.hpp"

namespace kpack::cli {

using Json = nlohmann::ordered_json;

namespace {

class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string strip_comment(std::string line) {
  if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
  return line;
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

std::string decimal(const Ratio& r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", to_double(r));
  return buf;
}

std::string decimal(double d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", d);
  return buf;
}

std::string blocks_text(const std::vector<std::vector<Vertex>>& blocks) {
  std::string s;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += ';';
    for (std::size_t j = 0; j < blocks[i].size(); ++j) {
      if (j) s += '-';
      s += std::to_string(blocks[i][j]);
    }
  }
  return s;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::ostream& open_output(const std::string& path, std::ofstream& file, std::ostream& fallback) {
  if (path.empty() || path == "-") return fallback;
  file.open(path);
  if (!file) throw Error("cannot write '" + path + "'");
  return file;
}

Json audit_json(const AuditEntry& a) {
  return Json{{"name", a.name},
              {"lhs", format_ratio(a.lhs)},
              {"relation", a.relation},
              {"rhs", format_ratio(a.rhs)},
              {"holds", a.holds}};
}

// ---------------------------------------------------------------------------
// gen

struct GenOptions {
  int n = 0;
  std::optional<int> k;
  std::string weight_class = "general";
  std::string dist;
  std::uint64_t seed = 0;
  Weight max_weight = 100;
  std::string out;
};

int cmd_gen(const GenOptions& o, std::ostream& out) {
  if (o.k && (*o.k < 1 || o.n % *o.k != 0)) throw Error("n not divisible by k");
  InstanceSpec spec;
  spec.n = o.n;
  spec.weight_class = parse_weight_class(o.weight_class);
  spec.distribution = o.dist.empty()
                          ? (spec.weight_class == WeightClass::metric ? Distribution::euclidean
                                                                      : Distribution::uniform)
                          : parse_distribution(o.dist);
  spec.seed = o.seed;
  spec.max_weight = o.max_weight;
  const auto g = generate_instance(spec);
  std::ofstream file;
  save_instance(open_output(o.out, file, out), g);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// solve

struct SolveOptions {
  std::string in;
  std::optional<int> k;
  std::string algo;
  std::string tsp = "exact";
  std::string kind = "cycle";
  bool oracle = false;
  std::string override_matching;
  std::string override_plan;
  std::string format = "json";
  std::string out;
};

int cmd_solve(const SolveOptions& o, std::ostream& out) {
  std::optional<Fixture> fixture;
  WeightedCompleteGraph g;
  if (!std::filesystem::exists(o.in) && try_parse_fixture_id(o.in)) {
    fixture = build_fixture(parse_fixture_id(o.in));
    g = fixture->graph;
  } else {
    g = load_instance_file(o.in);
  }

  RunRequest req;
  if (!o.algo.empty())
    req.algorithm = parse_algorithm(o.algo);
  else if (fixture)
    req.algorithm = fixture->algorithm;
  else
    throw Error("--algo is required");
  if (o.k)
    req.k = *o.k;
  else if (fixture)
    req.k = fixture->k;
  else
    throw Error("--k is required");
  if (req.k < 1 || g.size() % req.k != 0) throw Error("n not divisible by k");
  req.tsp = parse_tsp_solver(o.tsp);
  req.reduce_kind = o.kind == "path" ? PackingKind::path
                    : o.kind == "cycle" ? PackingKind::cycle
                                        : throw Error("--kind must be cycle or path");

  const bool plan_algo = req.algorithm == Algorithm::alg3 || req.algorithm == Algorithm::alg5;
  const bool matching_algo = req.algorithm == Algorithm::alg6 || req.algorithm == Algorithm::alg7 ||
                             req.algorithm == Algorithm::alg8 ||
                             req.algorithm == Algorithm::general4pp;
  auto builtin = [](const std::string& v) { return v == "fixture" || v == "paper"; };
  auto need_fixture = [&](std::string_view flag) {
    if (!fixture) throw Error(std::string(flag) + " fixture needs a fixture id as --in");
  };

  std::optional<Matching> matching;
  if (builtin(o.override_matching)) {
    need_fixture("--override-matching");
    if (!fixture->matching_override) throw Error("this fixture has no matching override");
    matching = fixture->matching_override;
  } else if (!o.override_matching.empty()) {
    matching = load_matching_file(o.override_matching);
  }

  if (!o.override_plan.empty()) {
    if (!plan_algo) throw Error("--override-plan applies to alg3 and alg5 only");
    if (builtin(o.override_plan)) {
      need_fixture("--override-plan");
      if (!fixture->plan_override) throw Error("this fixture has no plan override");
      req.plan_override = fixture->plan_override;
    } else {
      Matching indexed = matching.value_or(Matching{});
      if (!matching) {
        const int m = req.algorithm == Algorithm::alg3 ? (req.k - 1) / 2 : (req.k - 2) / 2;
        indexed = max_weight_matching_of_size(g, g.size() / req.k * m);
      }
      req.plan_override = load_plan_file(o.override_plan, indexed);
    }
  } else if (matching) {
    if (!matching_algo)
      throw Error("--override-matching applies to alg6, alg7, alg8 and general4pp only");
    req.matching_override = matching;
  }

  Json j;
  j["instance"] = o.in;
  j["n"] = g.size();
  j["k"] = req.k;
  j["class"] = std::string(to_string(g.class_tag()));
  j["denominator"] = g.denominator();
  j["algorithm"] = std::string(to_string(req.algorithm));
  j["kind"] = std::string(to_string(output_kind(req)));
  j["tsp"] = std::string(to_string(req.tsp));

  std::vector<std::vector<Vertex>> blocks;
  std::vector<AuditEntry> audits;
  Weight weight = 0;
  std::optional<RatioReport> report;
  if (o.oracle) {
    AuditOptions opts;
    if (fixture && g.size() > default_oracle_cap(req.k)) {
      if (output_kind(req) != fixture->kind || req.k != fixture->k)
        throw Error("oracle cap exceeded: n=" + std::to_string(g.size()));
      opts.known_kind = fixture->kind;
      opts.known_k = fixture->k;
      opts.known_optimum = certified_optimum(*fixture).weight;
    }
    report = audit_instance(g, {req}, o.in, opts).front();
    blocks = report->blocks;
    audits = report->audits;
    weight = report->algorithm_weight;
  } else {
    auto run = run_algorithm(g, req);
    blocks = run.blocks;
    audits = run.audits;
    weight = run.weight;
  }
  const bool hold = std::all_of(audits.begin(), audits.end(), [](const auto& a) { return a.holds; });

  j["weight"] = weight;
  j["packing"] = blocks;
  if (report) {
    j["oracle_weight"] = report->oracle_weight;
    j["ratio"] = format_ratio(report->ratio);
    j["ratio_decimal"] = decimal(report->ratio);
    j["guaranteed"] = report->guaranteed ? Json(format_ratio(*report->guaranteed)) : Json(nullptr);
  }
  j["audits"] = Json::array();
  for (const auto& a : audits) j["audits"].push_back(audit_json(a));
  j["audits_hold"] = hold;

  std::ofstream file;
  std::ostream& dst = open_output(o.out, file, out);
  if (o.format == "json") {
    dst << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    dst << "instance,n,k,algorithm,kind,tsp,weight,oracle_weight,ratio,ratio_decimal,guaranteed,"
           "audits_hold,packing\n";
    dst << o.in << ',' << g.size() << ',' << req.k << ',' << to_string(req.algorithm) << ','
        << to_string(output_kind(req)) << ',' << to_string(req.tsp) << ',' << weight << ',';
    if (report)
      dst << report->oracle_weight << ',' << format_ratio(report->ratio) << ','
          << decimal(report->ratio) << ','
          << (report->guaranteed ? format_ratio(*report->guaranteed) : "") << ',';
    else
      dst << ",,,,";
    dst << (hold ? "true" : "false") << ',' << blocks_text(blocks) << "\n";
  } else {
    throw Error("--format must be json or csv");
  }
  if (!hold) throw VerificationFailure("an audit inequality failed");
  return kExitOk;
}

// ---------------------------------------------------------------------------
// fixtures

struct FixtureOptions {
  std::string id = "all";
  std::string out_dir;
};

int cmd_fixtures(const FixtureOptions& o, std::ostream& out) {
  std::vector<FixtureId> ids;
  if (o.id == "all")
    ids = all_fixtures();
  else
    ids.push_back(parse_fixture_id(o.id));

  bool ok = true;
  for (FixtureId id : ids) {
    const Fixture f = build_fixture(id);
    const std::string name(to_string(id));
    if (!o.out_dir.empty()) {
      const std::filesystem::path dir(o.out_dir);
      std::filesystem::create_directories(dir);
      save_instance_file((dir / (name + ".packgraph")).string(), f.graph);
      if (f.matching_override) {
        std::ofstream m(dir / (name + ".matching"));
        save_matching(m, *f.matching_override);
      }
      if (f.plan_override) {
        Matching indexed;
        for (const auto& grp : f.plan_override->groups)
          indexed.edges.insert(indexed.edges.end(), grp.begin(), grp.end());
        std::ofstream m(dir / (name + ".matching"));
        save_matching(m, indexed);
        std::ofstream p(dir / (name + ".plan"));
        save_plan(p, *f.plan_override, indexed);
      }
    }
    for (const auto& c : verify_fixture(f)) {
      out << name << ": " << c.name << " expected=" << c.expected << " actual=" << c.actual << ' '
          << (c.pass ? "PASS" : "FAIL") << "\n";
      ok = ok && c.pass;
    }
  }
  if (!ok) throw VerificationFailure("fixture check failed");
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bench

struct BenchOptions {
  int k = 0;
  int n = 0;
  std::string weight_class = "metric";
  std::string dist;
  int count = 100;
  std::uint64_t seed = 1;
  std::string algos;
  std::string tsp = "exact";
  unsigned threads = 0;
  std::string out;
};

int cmd_bench(const BenchOptions& o, std::ostream& out, std::ostream& err) {
  if (o.k < 1 || o.n % o.k != 0) throw Error("n not divisible by k");
  if (o.n > default_oracle_cap(o.k))
    throw Error("oracle cap exceeded: n=" + std::to_string(o.n) + " > " +
                std::to_string(default_oracle_cap(o.k)));
  if (o.count < 1) throw Error("--count must be positive");

  InstanceSpec base;
  base.n = o.n;
  base.weight_class = parse_weight_class(o.weight_class);
  base.distribution = o.dist.empty() ? (base.weight_class == WeightClass::metric
                                            ? Distribution::euclidean
                                            : Distribution::uniform)
                                     : parse_distribution(o.dist);
  std::vector<RunRequest> requests;
  for (const auto& name : split_list(o.algos)) {
    RunRequest r;
    r.algorithm = parse_algorithm(name);
    r.k = o.k;
    r.tsp = parse_tsp_solver(o.tsp);
    requests.push_back(r);
  }
  if (requests.empty()) throw Error("--algos is empty");
  // Validate the parameters once before spreading work over threads.
  {
    InstanceSpec probe = base;
    probe.seed = o.seed;
    generate_instance(probe);
  }

  std::vector<std::vector<RatioReport>> results(o.count);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (int i = next++; i < o.count; i = next++) {
      try {
        InstanceSpec spec = base;
        spec.seed = o.seed + static_cast<std::uint64_t>(i);
        results[i] = audit_instance(generate_instance(spec), requests, std::to_string(spec.seed));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(o.threads ? o.threads
                                                                     : std::thread::hardware_concurrency(),
                                                           static_cast<unsigned>(o.count)));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::ofstream file;
  std::ostream& dst = open_output(o.out, file, out);
  dst << "seed,n,k,class,algorithm,weight,oracle_weight,ratio,ratio_decimal,guaranteed,audits_hold\n";
  struct Summary {
    int count = 0;
    Ratio min{1};
    double sum = 0;
    std::optional<Ratio> bound;
    int violations = 0;
    int audit_failures = 0;
  };
  std::map<std::string, Summary> summary;
  for (const auto& reports : results) {
    for (const auto& r : reports) {
      dst << r.instance_id << ',' << o.n << ',' << o.k << ',' << o.weight_class << ',' << r.algorithm
          << ',' << r.algorithm_weight << ',' << r.oracle_weight << ',' << format_ratio(r.ratio) << ','
          << decimal(r.ratio) << ',' << (r.guaranteed ? format_ratio(*r.guaranteed) : "") << ','
          << (r.all_hold() ? "true" : "false") << "\n";
      auto& s = summary[r.algorithm];
      s.min = s.count == 0 ? r.ratio : std::min(s.min, r.ratio);
      ++s.count;
      s.sum += to_double(r.ratio);
      if (r.guaranteed) {
        s.bound = s.bound ? std::min(*s.bound, *r.guaranteed) : *r.guaranteed;
        if (r.ratio < *r.guaranteed) ++s.violations;
      }
      if (!r.all_hold()) ++s.audit_failures;
    }
  }
  dst << "\nsummary,algorithm,count,min_ratio,min_decimal,mean_decimal,bound,bound_decimal,"
         "audit_failures,status\n";
  bool ok = true;
  for (const auto& req : requests) {
    const std::string name(to_string(req.algorithm));
    const auto& s = summary[name];
    const bool pass = s.violations == 0 && s.audit_failures == 0;
    ok = ok && pass;
    dst << "summary," << name << ',' << s.count << ',' << format_ratio(s.min) << ',' << decimal(s.min)
        << ',' << decimal(s.sum / s.count) << ',' << (s.bound ? format_ratio(*s.bound) : "none")
        << ',' << (s.bound ? decimal(*s.bound) : "") << ',' << s.audit_failures << ','
        << (pass ? "ok" : "VIOLATION") << "\n";
    if (!pass)
      err << "error: " << name << ": " << s.violations << " ratio bound violation(s), "
          << s.audit_failures << " audit failure(s)\n";
  }
  if (!ok) throw VerificationFailure("bench found bound violations");
  return kExitOk;
}

}  // namespace

// ---------------------------------------------------------------------------

Matching parse_matching(std::istream& in) {
  Matching m;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_comment(line);
    if (blank(line)) continue;
    std::istringstream ss(line);
    long long u = -1;
    long long v = -1;
    std::string extra;
    if (!(ss >> u >> v) || (ss >> extra) || u < 0 || v < 0 || u == v)
      throw Error("matching file line " + std::to_string(lineno) + ": expected 'u v'");
    m.edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return m;
}

Matching load_matching_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  return parse_matching(in);
}

void save_matching(std::ostream& out, const Matching& m) {
  for (const Edge& e : m.edges) out << e.u << ' ' << e.v << "\n";
}

EdgeGroupPlan parse_plan(std::istream& in, const Matching& indexed_edges) {
  EdgeGroupPlan plan;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_comment(line);
    if (blank(line)) continue;
    const auto bar = line.find('|');
    if (bar == std::string::npos)
      throw Error("plan file line " + std::to_string(lineno) + ": missing '|'");
    std::istringstream left(line.substr(0, bar));
    std::istringstream right(line.substr(bar + 1));
    std::vector<Edge> group;
    std::vector<Vertex> isolated;
    long long x = 0;
    while (left >> x) {
      if (x < 0 || x >= indexed_edges.size())
        throw Error("plan file line " + std::to_string(lineno) + ": edge index out of range");
      group.push_back(indexed_edges.edges[x]);
    }
    if (!left.eof()) throw Error("plan file line " + std::to_string(lineno) + ": bad edge index");
    while (right >> x) isolated.push_back(static_cast<Vertex>(x));
    if (!right.eof()) throw Error("plan file line " + std::to_string(lineno) + ": bad vertex id");
    plan.groups.push_back(std::move(group));
    plan.isolated.push_back(std::move(isolated));
  }
  return plan;
}

EdgeGroupPlan load_plan_file(const std::string& path, const Matching& indexed_edges) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  return parse_plan(in, indexed_edges);
}

void save_plan(std::ostream& out, const EdgeGroupPlan& plan, const Matching& indexed_edges) {
  for (std::size_t i = 0; i < plan.groups.size(); ++i) {
    for (const Edge& e : plan.groups[i]) {
      const auto it = std::find(indexed_edges.edges.begin(), indexed_edges.edges.end(), e);
      if (it == indexed_edges.edges.end()) throw Error("plan edge missing from the matching");
      out << (it - indexed_edges.edges.begin()) << ' ';
    }
    out << '|';
    for (Vertex v : plan.isolated[i]) out << ' ' << v;
    out << "\n";
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-cycle and k-path packing on complete weighted graphs", "kpack"};
  app.require_subcommand(1);

  GenOptions gen_opts;
  auto* gen = app.add_subcommand("gen", "Generate a packgraph instance");
  gen->add_option("--n", gen_opts.n, "Vertex count")->required();
  gen->add_option("--k", gen_opts.k, "Check that k divides n");
  gen->add_option("--class", gen_opts.weight_class, "general, metric, zero_one or one_two");
  gen->add_option("--dist", gen_opts.dist, "uniform, euclidean or closure");
  gen->add_option("--seed", gen_opts.seed);
  gen->add_option("--max-weight", gen_opts.max_weight);
  gen->add_option("--out", gen_opts.out, "Output file (default: standard output)");

  SolveOptions solve_opts;
  auto* solve = app.add_subcommand("solve", "Run one algorithm on an instance");
  solve->add_option("--in", solve_opts.in, "packgraph file or fixture id")->required();
  solve->add_option("--k", solve_opts.k);
  solve->add_option("--algo", solve_opts.algo,
                    "alg1..alg8, kpp-combined, general4pp, reduce12, 3cp911");
  solve->add_option("--tsp", solve_opts.tsp, "exact or greedy");
  solve->add_option("--kind", solve_opts.kind, "cycle or path (reduce12)");
  solve->add_flag("--oracle", solve_opts.oracle, "Compare against the exact optimum");
  solve->add_option("--override-matching", solve_opts.override_matching, "Matching file or 'fixture'");
  solve->add_option("--override-plan", solve_opts.override_plan, "Plan file or 'fixture'");
  solve->add_option("--format", solve_opts.format, "json or csv");
  solve->add_option("--out", solve_opts.out);

  FixtureOptions fixture_opts;
  auto* fixtures = app.add_subcommand("fixtures", "Build and verify the tight example instances");
  fixtures->add_option("--id", fixture_opts.id, "Fixture id or 'all'");
  fixtures->add_option("--out-dir", fixture_opts.out_dir);

  BenchOptions bench_opts;
  auto* bench = app.add_subcommand("bench", "Random instances against the exact oracle");
  bench->add_option("--k", bench_opts.k)->required();
  bench->add_option("--n", bench_opts.n)->required();
  bench->add_option("--class", bench_opts.weight_class);
  bench->add_option("--dist", bench_opts.dist);
  bench->add_option("--count", bench_opts.count);
  bench->add_option("--seed", bench_opts.seed);
  bench->add_option("--algos", bench_opts.algos, "Comma-separated algorithm names")->required();
  bench->add_option("--tsp", bench_opts.tsp);
  bench->add_option("--threads", bench_opts.threads);
  bench->add_option("--out", bench_opts.out);

  std::vector<const char*> argv{"kpack"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(gen_opts, out);
    if (*solve) return cmd_solve(solve_opts, out);
    if (*fixtures) return cmd_fixtures(fixture_opts, out);
    if (*bench) return cmd_bench(bench_opts, out, err);
  } catch (const VerificationFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace kpack::cli
