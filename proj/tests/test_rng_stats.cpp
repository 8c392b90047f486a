#include <gtest/gtest.h>

#include <cmath>

#include "rgauge/oracle.hpp"
#include "rgauge/rng.hpp"
#include "rgauge/stats.hpp"

using rgauge::CounterRng;

TEST(CounterRng, UniformRanges) {
  const CounterRng r(123);
  for (std::uint64_t i = 0; i < 100000; ++i) {
    const double u = r.uniform(i);
    const double v = r.uniform_open(i);
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    EXPECT_GT(v, 0.0);
    EXPECT_LT(v, 1.0);
  }
}

TEST(CounterRng, StreamsDiffer) {
  const CounterRng r(7);
  EXPECT_NE(r.split(0).bits(0), r.split(1).bits(0));
  EXPECT_NE(r.split(0).bits(0), r.bits(0));
  EXPECT_EQ(r.split(5).key(), CounterRng(7).split(5).key());
}

TEST(CounterRng, MeanAndVariance) {
  const CounterRng r(2024);
  rgauge::ShiftedAccumulator acc;
  for (std::uint64_t i = 0; i < 1000000; ++i) acc.add(r.uniform(i));
  const auto m = acc.finish();
  EXPECT_NEAR(m.mean, 0.5, 4.0 * std::sqrt(1.0 / 12.0 / 1e6));
  EXPECT_NEAR(m.sample_variance(), 1.0 / 12.0, 5e-4);
}

TEST(Stats, ConstantStreamIsExact) {
  rgauge::ShiftedAccumulator acc;
  for (int i = 0; i < 1000; ++i) acc.add(0.1);
  const auto m = acc.finish();
  EXPECT_EQ(m.mean, 0.1);
  EXPECT_EQ(m.sample_variance(), 0.0);
}

TEST(Stats, MergeMatchesSinglePass) {
  std::vector<double> xs;
  for (int i = 0; i < 1000; ++i) xs.push_back(std::sin(i * 0.37) * 3.0 + 1e6);
  rgauge::ShiftedAccumulator all;
  rgauge::ShiftedAccumulator a;
  rgauge::ShiftedAccumulator b;
  for (int i = 0; i < 1000; ++i) {
    all.add(xs[i]);
    (i < 313 ? a : b).add(xs[i]);
  }
  auto merged = a.finish();
  merged.merge(b.finish());
  const auto whole = all.finish();
  EXPECT_EQ(merged.n, whole.n);
  EXPECT_NEAR(merged.mean, whole.mean, 1e-9);
  EXPECT_NEAR(merged.sample_variance(), whole.sample_variance(), 1e-9);
}

TEST(Threads, ResultsIndependentOfWorkerCount) {
  const rgauge::SinusoidalTransform t(1.0, rgauge::TrigKind::Sin, rgauge::AngleDistribution::laplace(1.0));
  rgauge::set_thread_count(1);
  const auto one = rgauge::estimate_moments(t, 4, 77, 300000);
  rgauge::set_thread_count(4);
  const auto four = rgauge::estimate_moments(t, 4, 77, 300000);
  rgauge::set_thread_count(0);
  for (int m = 0; m < 4; ++m) {
    EXPECT_EQ(one[m].value, four[m].value);
    EXPECT_EQ(one[m].std_error, four[m].std_error);
  }
}
