#include "rgauge/angles.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace rgauge {
namespace {

using std::numbers::pi;

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw std::invalid_argument(std::string(name) + " must be positive and finite");
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string to_string(AngleKind kind) {
  switch (kind) {
    case AngleKind::Uniform: return "uniform";
    case AngleKind::GaussianZeroMean: return "gaussian_zero_mean";
    case AngleKind::Gaussian: return "gaussian";
    case AngleKind::Laplace: return "laplace";
    case AngleKind::Cauchy: return "cauchy";
    case AngleKind::Triangular: return "triangular";
  }
  return "unknown";
}

AngleDistribution AngleDistribution::uniform() {
  return {AngleKind::Uniform, 0.0, 0.0, 0.0, 0.0};
}

AngleDistribution AngleDistribution::gaussian_zero_mean(double sigma) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma))
    throw std::invalid_argument("sigma must be non-negative and finite");
  return {AngleKind::GaussianZeroMean, sigma, 0.0, 0.0, 0.0};
}

AngleDistribution AngleDistribution::gaussian(double sigma, double mean) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma))
    throw std::invalid_argument("sigma must be non-negative and finite");
  if (!std::isfinite(mean)) throw std::invalid_argument("theta0 must be finite");
  return {AngleKind::Gaussian, sigma, mean, 0.0, 0.0};
}

AngleDistribution AngleDistribution::laplace(double alpha) {
  require_positive(alpha, "alpha");
  return {AngleKind::Laplace, 0.0, 0.0, alpha, 0.0};
}

AngleDistribution AngleDistribution::cauchy(double alpha) {
  require_positive(alpha, "alpha");
  return {AngleKind::Cauchy, 0.0, 0.0, alpha, 0.0};
}

AngleDistribution AngleDistribution::triangular(double half_width) {
  require_positive(half_width, "a");
  if (half_width > pi) throw std::invalid_argument("a must not exceed pi");
  return {AngleKind::Triangular, 0.0, 0.0, 0.0, half_width};
}

AngleDistribution AngleDistribution::point_mass(double at) {
  return at == 0.0 ? gaussian_zero_mean(0.0) : gaussian(0.0, at);
}

bool AngleDistribution::is_symmetric() const noexcept {
  return !(kind_ == AngleKind::Gaussian && mean_ != 0.0);
}

bool AngleDistribution::has_algebraic_cf_decay() const noexcept {
  return kind_ == AngleKind::Laplace || kind_ == AngleKind::Triangular;
}

std::complex<double> AngleDistribution::cf(std::int64_t n) const {
  if (n == 0) return 1.0;
  const double nd = static_cast<double>(n);
  switch (kind_) {
    case AngleKind::Uniform:
      return 0.0;
    case AngleKind::GaussianZeroMean:
      return std::exp(-0.5 * sigma_ * sigma_ * nd * nd);
    case AngleKind::Gaussian:
      return std::polar(std::exp(-0.5 * sigma_ * sigma_ * nd * nd), nd * mean_);
    case AngleKind::Laplace:
      return alpha_ * alpha_ / (alpha_ * alpha_ + nd * nd);
    case AngleKind::Cauchy:
      return std::exp(-alpha_ * std::abs(nd));
    case AngleKind::Triangular: {
      const double s = std::sin(0.5 * nd * half_width_);
      return 4.0 * s * s / (half_width_ * half_width_ * nd * nd);
    }
  }
  return 0.0;
}

double AngleDistribution::draw(const CounterRng& rng, std::uint64_t index) const {
  const std::uint64_t c = 2 * index;
  switch (kind_) {
    case AngleKind::Uniform:
      return pi - 2.0 * pi * rng.uniform(c);
    case AngleKind::GaussianZeroMean:
    case AngleKind::Gaussian: {
      if (sigma_ == 0.0) return mean_;
      const double r = std::sqrt(-2.0 * std::log(rng.uniform_open(c)));
      return mean_ + sigma_ * r * std::cos(2.0 * pi * rng.uniform(c + 1));
    }
    case AngleKind::Laplace: {
      const double u = rng.uniform_open(c) - 0.5;
      const double mag = -std::log1p(-2.0 * std::abs(u)) / alpha_;
      return u < 0.0 ? -mag : mag;
    }
    case AngleKind::Cauchy:
      return alpha_ * std::tan(pi * (rng.uniform_open(c) - 0.5));
    case AngleKind::Triangular:
      return half_width_ * (rng.uniform(c) - rng.uniform(c + 1));
  }
  return 0.0;
}

std::string AngleDistribution::spec() const {
  switch (kind_) {
    case AngleKind::Uniform: return "uniform";
    case AngleKind::GaussianZeroMean: return "gaussian:sigma=" + fmt17(sigma_);
    case AngleKind::Gaussian:
      return "gaussian:sigma=" + fmt17(sigma_) + ",theta0=" + fmt17(mean_);
    case AngleKind::Laplace: return "laplace:alpha=" + fmt17(alpha_);
    case AngleKind::Cauchy: return "cauchy:alpha=" + fmt17(alpha_);
    case AngleKind::Triangular: return "triangular:a=" + fmt17(half_width_);
  }
  return "unknown";
}

std::vector<double> sample(const AngleDistribution& dist, std::uint64_t seed, std::uint64_t count) {
  if (count > kMaxSampleCount)
    throw std::length_error("sample: count " + std::to_string(count) + " exceeds 1e8");
  const CounterRng rng(seed);
  std::vector<double> out(count);
  for (std::uint64_t i = 0; i < count; ++i) out[i] = dist.draw(rng, i);
  return out;
}

std::complex<double> empirical_cf(std::span<const double> samples, std::int64_t n) {
  if (samples.empty()) throw std::invalid_argument("empirical_cf: no samples");
  const double nd = static_cast<double>(n);
  double re = 0.0;
  double im = 0.0;
  for (double s : samples) {
    re += std::cos(nd * s);
    im += std::sin(nd * s);
  }
  const double count = static_cast<double>(samples.size());
  return {re / count, im / count};
}

}  // namespace rgauge
