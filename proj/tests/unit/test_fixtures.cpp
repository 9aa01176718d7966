#include <gtest/gtest.h>

#include "kpack/fixtures.hpp"

using namespace kpack;

namespace kpack {
void PrintTo(FixtureId id, std::ostream* os) { *os << to_string(id); }
}  // namespace kpack

class FixtureTest : public ::testing::TestWithParam<FixtureId> {};

TEST_P(FixtureTest, AllChecksPass) {
  const auto f = build_fixture(GetParam());
  auto checks = verify_fixture(f);
  ASSERT_FALSE(checks.empty());
  for (const auto& c : checks) EXPECT_TRUE(c.pass) << c.name << ": expected " << c.expected << " got " << c.actual;
}

TEST_P(FixtureTest, WitnessReachesOptimum) {
  const auto f = build_fixture(GetParam());
  EXPECT_EQ(packing_weight(f.graph, f.optimal_blocks, f.k, f.kind), f.expected_opt);
  EXPECT_EQ(Ratio(f.expected_algorithm, f.expected_opt), f.expected_ratio);
}

INSTANTIATE_TEST_SUITE_P(All, FixtureTest, ::testing::ValuesIn(all_fixtures()),
                         [](const auto& info) { return std::string(to_string(info.param)); });

TEST(FixtureIds, ShortAndFullNames) {
  EXPECT_EQ(parse_fixture_id("fig2"), FixtureId::fig2_5cp);
  EXPECT_EQ(parse_fixture_id("fig5_metric4cp"), FixtureId::fig5_metric4cp);
  EXPECT_FALSE(try_parse_fixture_id("fig9"));
  EXPECT_THROW(parse_fixture_id("fig9"), Error);
}

TEST(Fixtures, ExpectedTable) {
  const auto f2 = build_fixture(FixtureId::fig2_5cp);
  EXPECT_EQ(f2.graph.size(), 25);
  EXPECT_EQ(f2.expected_ratio, Ratio(7, 10));
  EXPECT_EQ(build_fixture(FixtureId::fig3_general4cp).expected_ratio, Ratio(3, 4));
  EXPECT_EQ(build_fixture(FixtureId::fig4_general4pp).expected_ratio, Ratio(3, 4));
  EXPECT_EQ(build_fixture(FixtureId::fig5_metric4cp).expected_ratio, Ratio(5, 6));
  EXPECT_EQ(build_fixture(FixtureId::fig3_lifted_12).expected_ratio, Ratio(7, 8));
}

TEST(CertifiedOptimum, RowArgumentForTheGrid) {
  const auto f = build_fixture(FixtureId::fig2_5cp);
  auto c = certified_optimum(f);
  EXPECT_EQ(c.weight, 50);
  for (const auto& check : c.checks) EXPECT_TRUE(check.pass) << check.name;
}
