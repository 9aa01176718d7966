#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "kpack/fixtures.hpp"

using namespace kpack;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "kpack_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(CliGen, WritesLoadableInstance) {
  auto r = run({"gen", "--n", "12", "--k", "4", "--class", "metric", "--dist", "euclidean", "--seed", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto g = load_instance_text(r.out);
  EXPECT_EQ(g.size(), 12);
  EXPECT_EQ(g.class_tag(), WeightClass::metric);
  EXPECT_EQ(run({"gen", "--n", "12", "--k", "4", "--class", "metric", "--dist", "euclidean", "--seed", "1"}).out,
            r.out);
}

TEST(CliGen, UsageErrors) {
  auto r = run({"gen", "--n", "7", "--k", "4"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("n not divisible by k"), std::string::npos);
  EXPECT_EQ(run({"gen"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"gen", "--n", "8", "--class", "metric", "--dist", "uniform"}).code, 2);
}

TEST(CliSolve, FixtureWithOracleJson) {
  auto r = run({"solve", "--in", "fig5", "--algo", "alg7", "--k", "4", "--oracle", "--override-matching", "paper"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["weight"], 20);
  EXPECT_EQ(j["oracle_weight"], 24);
  EXPECT_EQ(j["ratio"], "5/6");
  for (const auto& a : j["audits"]) EXPECT_TRUE(a["holds"].get<bool>()) << a["name"];
}

TEST(CliSolve, GridFixtureUsesCertifiedOptimum) {
  auto r = run({"solve", "--in", "fig2", "--algo", "alg3", "--k", "5", "--oracle", "--override-plan", "fixture"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["weight"], 35);
  EXPECT_EQ(j["oracle_weight"], 50);
  EXPECT_EQ(j["ratio"], "7/10");
}

TEST(CliSolve, CsvAndFiles) {
  const auto in = scratch("solve_in.packgraph");
  ASSERT_EQ(run({"gen", "--n", "9", "--class", "one_two", "--seed", "3", "--out", in.string()}).code, 0);
  const auto out = scratch("solve_out.csv");
  auto r = run({"solve", "--in", in.string(), "--algo", "3cp911", "--k", "3", "--oracle", "--format", "csv",
                "--out", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream f(out);
  std::string header;
  std::string row;
  std::getline(f, header);
  std::getline(f, row);
  EXPECT_EQ(header.rfind("instance,n,k,algorithm", 0), 0u);
  EXPECT_NE(row.find("3cp911"), std::string::npos);
  EXPECT_NE(row.find("true"), std::string::npos);
}

TEST(CliSolve, Errors) {
  EXPECT_EQ(run({"solve", "--in", "/nonexistent/x.packgraph", "--algo", "alg1", "--k", "3"}).code, 2);
  EXPECT_EQ(run({"solve", "--in", "fig5", "--algo", "alg99", "--k", "4"}).code, 2);
  EXPECT_EQ(run({"solve", "--in", "fig5", "--algo", "alg7", "--k", "3"}).code, 2);
  EXPECT_EQ(run({"solve", "--in", "fig5", "--algo", "alg7", "--k", "4", "--format", "xml"}).code, 2);
}

TEST(CliSolve, OverrideMatchingFile) {
  const auto f = build_fixture(FixtureId::fig3_general4cp);
  const auto path = scratch("fig3.matching");
  {
    std::ofstream m(path);
    cli::save_matching(m, *f.matching_override);
  }
  auto r = run({"solve", "--in", "fig3", "--algo", "alg6", "--k", "4", "--override-matching", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["weight"], 9);
  {
    std::ofstream m(path);
    m << "0 2\n1 3\n4 6\n5 7\n8 10\n9 11\n";
  }
  EXPECT_EQ(run({"solve", "--in", "fig3", "--algo", "alg6", "--k", "4", "--override-matching", path.string()}).code,
            2);
}

TEST(CliMatchingFormat, RoundTripAndErrors) {
  Matching m{{Edge(0, 3), Edge(1, 2)}};
  std::ostringstream out;
  cli::save_matching(out, m);
  std::istringstream in("# comment\n" + out.str());
  EXPECT_EQ(cli::parse_matching(in).edges, m.edges);
  std::istringstream bad("0 1 2\n");
  EXPECT_THROW(cli::parse_matching(bad), Error);
  std::istringstream loop("1 1\n");
  EXPECT_THROW(cli::parse_matching(loop), Error);
}

TEST(CliPlanFormat, RoundTrip) {
  const auto f = build_fixture(FixtureId::fig2_5cp);
  Matching indexed;
  for (const auto& g : f.plan_override->groups)
    for (const Edge& e : g) indexed.edges.push_back(e);
  std::ostringstream out;
  cli::save_plan(out, *f.plan_override, indexed);
  std::istringstream in(out.str());
  auto back = cli::parse_plan(in, indexed);
  EXPECT_EQ(back.groups, f.plan_override->groups);
  EXPECT_EQ(back.isolated, f.plan_override->isolated);
  std::istringstream bad("0 99 | 3\n");
  EXPECT_THROW(cli::parse_plan(bad, indexed), Error);
}

TEST(CliFixtures, AllPassAndWriteFiles) {
  const auto dir = scratch("fixtures_out");
  fs::remove_all(dir);
  auto r = run({"fixtures", "--out-dir", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir / "fig2_5cp.packgraph"));
  EXPECT_TRUE(fs::exists(dir / "fig2_5cp.plan"));
  EXPECT_TRUE(fs::exists(dir / "fig3_general4cp.matching"));
  auto g = load_instance_file((dir / "fig5_metric4cp.packgraph").string());
  EXPECT_EQ(g, build_fixture(FixtureId::fig5_metric4cp).graph);
  EXPECT_EQ(run({"fixtures", "--id", "fig9"}).code, 2);
}

TEST(CliBench, DeterministicAcrossThreadCounts) {
  const std::vector<std::string> base{"bench", "--k", "4", "--n", "8", "--class", "metric", "--count", "6",
                                      "--seed", "5", "--algos", "alg7,alg8,alg6"};
  auto one = base;
  one.insert(one.end(), {"--threads", "1"});
  auto four = base;
  four.insert(four.end(), {"--threads", "4"});
  auto a = run(one);
  auto b = run(four);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("summary,alg8,6,"), std::string::npos);
  EXPECT_EQ(a.out.find("VIOLATION"), std::string::npos);
}

TEST(CliBench, UsageErrors) {
  EXPECT_EQ(run({"bench", "--k", "4", "--n", "10", "--algos", "alg7"}).code, 2);
  EXPECT_EQ(run({"bench", "--k", "4", "--n", "8", "--algos", "nope"}).code, 2);
}
