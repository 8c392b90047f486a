#include <gtest/gtest.h>

#include <cmath>

#include "rgauge/corollaries.hpp"
#include "rgauge/report.hpp"

using rgauge::Verdict;

TEST(Adjudicate, Rules) {
  // Printed value within 3 sigma of MC.
  EXPECT_EQ(rgauge::adjudicate(1.0, 1.0, 1.002, 0.001), Verdict::Agree);
  // Printed value rejected, analytic supported.
  EXPECT_EQ(rgauge::adjudicate(2.0, 1.0, 1.002, 0.001), Verdict::Disagree);
  // Neither side supported.
  EXPECT_EQ(rgauge::adjudicate(2.0, 1.5, 1.0, 0.001), Verdict::Untested);
  EXPECT_EQ(rgauge::adjudicate(std::nullopt, 1.0, 1.0, 0.001), Verdict::Untested);
  // Floor covers exact zeros.
  EXPECT_EQ(rgauge::adjudicate(0.0, 0.0, 0.0, 0.0, 1e-12), Verdict::Agree);
}

TEST(Verdict, StringRoundTrip) {
  for (auto v : {Verdict::Agree, Verdict::Disagree, Verdict::Untested})
    EXPECT_EQ(rgauge::parse_verdict(rgauge::to_string(v)), v);
  EXPECT_THROW(rgauge::parse_verdict("MAYBE"), std::invalid_argument);
}

TEST(Corollaries, ZeroMeanGaussianTable) {
  const rgauge::SinusoidalTransform t(1.0, rgauge::TrigKind::Sin,
                                      rgauge::AngleDistribution::gaussian_zero_mean(0.5));
  EXPECT_EQ(*rgauge::printed_moment(t, 1), 0.0);
  EXPECT_NEAR(*rgauge::printed_moment(t, 2), 0.5 * (1.0 - std::exp(-0.5)), 1e-16);
  EXPECT_NEAR(*rgauge::printed_moment(t, 4), (3.0 - 4.0 * std::exp(-0.5) + std::exp(-2.0)) / 8.0, 1e-16);
  EXPECT_NEAR(*rgauge::printed_moment(t, 2), rgauge::moment_bessel(t, 2), 1e-15);
}

TEST(Corollaries, KnownDiscrepancies) {
  const rgauge::SinusoidalTransform c(1.0, rgauge::TrigKind::Sin, rgauge::AngleDistribution::cauchy(1.0));
  // Printed second moment is four times the analytic value.
  EXPECT_NEAR(*rgauge::printed_moment(c, 2), 4.0 * rgauge::moment_bessel(c, 2), 1e-14);
  EXPECT_FALSE(rgauge::printed_moment(c, 3).has_value());
  // The printed shifted mean carries cos(theta0), i.e. twice the cosine-kind mean.
  const rgauge::SinusoidalTransform g(1.0, rgauge::TrigKind::Cos, rgauge::AngleDistribution::gaussian(0.5, 0.5));
  EXPECT_NEAR(*rgauge::printed_moment(g, 1), 2.0 * rgauge::moment_bessel(g, 1), 1e-14);
}

TEST(Report, GoldenParsingAndComparison) {
  const auto golden = rgauge::parse_golden("# c\nid,verdict\nlaplace/sin/alpha=2/m1,AGREE\r\n");
  ASSERT_EQ(golden.size(), 1u);
  EXPECT_EQ(golden.at("laplace/sin/alpha=2/m1"), Verdict::Agree);
  EXPECT_THROW(rgauge::parse_golden("no-comma-here"), std::invalid_argument);
  EXPECT_EQ(rgauge::group_of("gauge/cauchy-alpha=1/var-re"), "gauge");
}

TEST(Report, SmallRunIsDeterministicAndComplete) {
  const auto a = rgauge::build_report({"laplace", "phasor"}, 5, 20000);
  const auto b = rgauge::build_report({"laplace", "phasor"}, 5, 20000);
  EXPECT_EQ(a.to_csv(), b.to_csv());
  EXPECT_EQ(a.to_csv().substr(0, 42), "id,group,printed,analytic,mc,std_error,ver");
  for (const auto& r : a.rows) EXPECT_TRUE(r.group == "laplace" || r.group == "phasor");

  rgauge::GoldenVerdicts golden;
  for (const auto& r : a.rows) golden[r.id] = r.verdict;
  EXPECT_TRUE(rgauge::compare_with_golden(a, golden, {"laplace", "phasor"}).empty());
  // A tampered entry, and a golden row that the run never produced.
  auto tampered = golden;
  tampered.begin()->second = Verdict::Untested;
  EXPECT_FALSE(rgauge::compare_with_golden(a, tampered, {"laplace", "phasor"}).empty());
  auto extra = golden;
  extra["laplace/sin/alpha=9/m2"] = Verdict::Agree;
  EXPECT_FALSE(rgauge::compare_with_golden(a, extra, {"laplace", "phasor"}).empty());
}

TEST(Report, GroupSelection) {
  EXPECT_TRUE(rgauge::build_report({}, 1, 1000).rows.empty());
  EXPECT_THROW(rgauge::build_report({"nope"}, 1, 1000), std::invalid_argument);
  EXPECT_EQ(rgauge::report_groups().size(), 9u);
}
