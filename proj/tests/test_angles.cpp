#include <gtest/gtest.h>

#include <cmath>

#include "rgauge/angles.hpp"
#include "support/oracles.hpp"

using rgauge::AngleDistribution;
using rgauge::AngleKind;

namespace {

std::vector<AngleDistribution> catalog() {
  return {AngleDistribution::uniform(),          AngleDistribution::gaussian_zero_mean(0.8),
          AngleDistribution::gaussian(0.6, 0.9), AngleDistribution::laplace(1.5),
          AngleDistribution::cauchy(0.4),        AngleDistribution::triangular(2.0)};
}

}  // namespace

TEST(AngleCf, UnitAtZeroAndBounded) {
  for (const auto& d : catalog()) {
    EXPECT_EQ(d.cf(0), std::complex<double>(1.0, 0.0)) << d.spec();
    for (int n = -40; n <= 40; ++n) EXPECT_LE(std::abs(d.cf(n)), 1.0 + 1e-15);
  }
}

TEST(AngleCf, HermitianAndSymmetryFlag) {
  for (const auto& d : catalog()) {
    for (int n = 1; n <= 10; ++n) {
      EXPECT_EQ(d.cf(-n), std::conj(d.cf(n)));
      if (d.is_symmetric()) EXPECT_EQ(d.cf(n).imag(), 0.0);
    }
  }
  EXPECT_FALSE(AngleDistribution::gaussian(0.5, 0.3).is_symmetric());
  EXPECT_TRUE(AngleDistribution::gaussian(0.5, 0.0).is_symmetric());
}

TEST(AngleCf, MatchesDensityQuadrature) {
  for (const auto& d : catalog()) {
    for (int n : {1, 2, 3, 7}) {
      const auto ref = oracle::angle_expectation<std::complex<double>>(
          d, [n](double t) { return std::polar(1.0, n * t); });
      EXPECT_NEAR(std::abs(d.cf(n) - ref), 0.0, 1e-12) << d.spec() << " n=" << n;
    }
  }
}

TEST(AngleCf, ClosedForms) {
  EXPECT_DOUBLE_EQ(AngleDistribution::gaussian_zero_mean(0.5).cf(2).real(), std::exp(-0.5));
  EXPECT_DOUBLE_EQ(AngleDistribution::cauchy(1.0).cf(1).real(), std::exp(-1.0));
  EXPECT_DOUBLE_EQ(AngleDistribution::laplace(2.0).cf(2).real(), 0.5);
  EXPECT_EQ(AngleDistribution::uniform().cf(3), std::complex<double>(0.0, 0.0));
  const auto p = AngleDistribution::point_mass(0.7);
  EXPECT_NEAR(std::abs(p.cf(3) - std::polar(1.0, 2.1)), 0.0, 1e-15);
}

TEST(AngleSampling, EmpiricalCfWithinFourSigma) {
  const std::uint64_t count = 200000;
  for (const auto& d : catalog()) {
    const auto xs = rgauge::sample(d, 99, count);
    for (int n : {1, 2}) {
      const auto e = rgauge::empirical_cf(xs, n);
      // Var of a unit phasor average is at most 1/N.
      EXPECT_LT(std::abs(e - d.cf(n)), 4.0 / std::sqrt(static_cast<double>(count))) << d.spec();
    }
  }
}

TEST(AngleSampling, TriangularSupportAndGaussianSpread) {
  const auto tri = rgauge::sample(AngleDistribution::triangular(1.2), 5, 50000);
  for (double t : tri) EXPECT_LE(std::abs(t), 1.2);
  const auto g = rgauge::sample(AngleDistribution::gaussian(2.0, 1.0), 6, 400000);
  double m = 0.0;
  double v = 0.0;
  for (double t : g) m += t;
  m /= g.size();
  for (double t : g) v += (t - m) * (t - m);
  v /= g.size() - 1;
  EXPECT_NEAR(m, 1.0, 4.0 * 2.0 / std::sqrt(4e5));
  EXPECT_NEAR(v, 4.0, 4.0 * 4.0 * std::sqrt(2.0 / 4e5));
}

TEST(AngleSampling, Reproducible) {
  const auto d = AngleDistribution::cauchy(0.3);
  EXPECT_EQ(rgauge::sample(d, 17, 1000), rgauge::sample(d, 17, 1000));
  EXPECT_NE(rgauge::sample(d, 17, 1000), rgauge::sample(d, 18, 1000));
  const auto longer = rgauge::sample(d, 17, 2000);
  const auto shorter = rgauge::sample(d, 17, 1000);
  EXPECT_TRUE(std::equal(shorter.begin(), shorter.end(), longer.begin()));
}

TEST(AngleDistribution, Validation) {
  EXPECT_THROW(AngleDistribution::gaussian_zero_mean(-1.0), std::invalid_argument);
  EXPECT_THROW(AngleDistribution::laplace(0.0), std::invalid_argument);
  EXPECT_THROW(AngleDistribution::cauchy(-2.0), std::invalid_argument);
  EXPECT_THROW(AngleDistribution::triangular(4.0), std::invalid_argument);
  EXPECT_THROW(AngleDistribution::triangular(0.0), std::invalid_argument);
  EXPECT_THROW(rgauge::sample(AngleDistribution::uniform(), 1, rgauge::kMaxSampleCount + 1),
               std::length_error);
  EXPECT_THROW(rgauge::empirical_cf(std::vector<double>{}, 1), std::invalid_argument);
}

TEST(AngleDistribution, AlgebraicDecayFlag) {
  EXPECT_TRUE(AngleDistribution::laplace(1.0).has_algebraic_cf_decay());
  EXPECT_TRUE(AngleDistribution::triangular(1.0).has_algebraic_cf_decay());
  EXPECT_FALSE(AngleDistribution::cauchy(1.0).has_algebraic_cf_decay());
  EXPECT_FALSE(AngleDistribution::gaussian_zero_mean(1.0).has_algebraic_cf_decay());
}
