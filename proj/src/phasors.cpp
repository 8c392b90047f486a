#include "rgauge/phasors.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace rgauge {
namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw std::invalid_argument(std::string(name) + " must be finite");
}

}  // namespace

AmplitudeLaw AmplitudeLaw::deterministic(double value) {
  require_finite(value, "value");
  return {Kind::Deterministic, value, 0.0};
}

AmplitudeLaw AmplitudeLaw::uniform(double lo, double hi) {
  require_finite(lo, "lo");
  require_finite(hi, "hi");
  if (!(hi >= lo)) throw std::invalid_argument("uniform amplitude needs lo <= hi");
  return {Kind::Uniform, lo, hi};
}

AmplitudeLaw AmplitudeLaw::gaussian(double mean, double std) {
  require_finite(mean, "mean");
  require_finite(std, "std");
  if (std < 0.0) throw std::invalid_argument("std must be non-negative");
  return {Kind::Gaussian, mean, std};
}

double AmplitudeLaw::mean() const noexcept {
  switch (kind_) {
    case Kind::Deterministic: return p0_;
    case Kind::Uniform: return 0.5 * (p0_ + p1_);
    case Kind::Gaussian: return p0_;
  }
  return 0.0;
}

double AmplitudeLaw::variance() const noexcept {
  switch (kind_) {
    case Kind::Deterministic: return 0.0;
    case Kind::Uniform: return (p1_ - p0_) * (p1_ - p0_) / 12.0;
    case Kind::Gaussian: return p1_ * p1_;
  }
  return 0.0;
}

double AmplitudeLaw::second_moment() const noexcept { return variance() + mean() * mean(); }

double AmplitudeLaw::draw(const CounterRng& rng, std::uint64_t index) const {
  const std::uint64_t c = 2 * index;
  switch (kind_) {
    case Kind::Deterministic: return p0_;
    case Kind::Uniform: return p0_ + (p1_ - p0_) * rng.uniform(c);
    case Kind::Gaussian: {
      if (p1_ == 0.0) return p0_;
      const double r = std::sqrt(-2.0 * std::log(rng.uniform_open(c)));
      return p0_ + p1_ * r * std::cos(2.0 * std::numbers::pi * rng.uniform(c + 1));
    }
  }
  return 0.0;
}

std::string AmplitudeLaw::spec() const {
  switch (kind_) {
    case Kind::Deterministic: return "det:value=" + fmt17(p0_);
    case Kind::Uniform: return "uniform:lo=" + fmt17(p0_) + ",hi=" + fmt17(p1_);
    case Kind::Gaussian: return "gaussian:mean=" + fmt17(p0_) + ",std=" + fmt17(p1_);
  }
  return "unknown";
}

PhasorSum::PhasorSum(std::vector<PhasorTerm> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw std::invalid_argument("phasor sum needs at least one term");
}

double cos_variance(const AngleDistribution& d) {
  const auto c1 = d.cf(1);
  const auto c2 = d.cf(2);
  return std::max(0.0, 0.5 * (1.0 + c2.real()) - c1.real() * c1.real());
}

double sin_variance(const AngleDistribution& d) {
  const auto c1 = d.cf(1);
  const auto c2 = d.cf(2);
  return std::max(0.0, 0.5 * (1.0 - c2.real()) - c1.imag() * c1.imag());
}

std::complex<double> sum_mean(const PhasorSum& s) {
  std::complex<double> total = 0.0;
  for (const auto& term : s.terms()) total += term.amplitude.mean() * term.angle.cf(1);
  return total;
}

ComplexVariance sum_variance_paper(const PhasorSum& s) {
  double re = 0.0;
  double im = 0.0;
  for (const auto& term : s.terms()) {
    const double va = term.amplitude.variance();
    re += va * cos_variance(term.angle);
    im += va * sin_variance(term.angle);
  }
  return {re, im};
}

ComplexVariance sum_variance_exact(const PhasorSum& s) {
  double re = 0.0;
  double im = 0.0;
  for (const auto& term : s.terms()) {
    const double ea = term.amplitude.mean();
    const double ea2 = term.amplitude.second_moment();
    const auto c1 = term.angle.cf(1);
    const double c2 = term.angle.cf(2).real();
    re += ea2 * 0.5 * (1.0 + c2) - ea * ea * c1.real() * c1.real();
    im += ea2 * 0.5 * (1.0 - c2) - ea * ea * c1.imag() * c1.imag();
  }
  return {re, im};
}

std::complex<double> draw_sum(const PhasorSum& s, const CounterRng& root, std::uint64_t index) {
  std::complex<double> z = 0.0;
  std::uint64_t j = 0;
  for (const auto& term : s.terms()) {
    const double a = term.amplitude.draw(root.split(2 * j), index);
    const double theta = term.angle.draw(root.split(2 * j + 1), index);
    z += std::complex<double>(a * std::cos(theta), a * std::sin(theta));
    ++j;
  }
  return z;
}

std::vector<std::complex<double>> sample_sum(const PhasorSum& s, std::uint64_t seed,
                                             std::uint64_t count) {
  if (count > kMaxSampleCount)
    throw std::length_error("sample_sum: count " + std::to_string(count) + " exceeds 1e8");
  const CounterRng root(seed);
  std::vector<std::complex<double>> out(count);
  for (std::uint64_t i = 0; i < count; ++i) out[i] = draw_sum(s, root, i);
  return out;
}

std::vector<double> cos_sum_eval(std::span<const double> amplitudes,
                                 std::span<const AngleDistribution> angles, std::uint64_t seed,
                                 std::uint64_t count) {
  if (amplitudes.size() != angles.size())
    throw std::invalid_argument("cos_sum_eval: " + std::to_string(amplitudes.size()) +
                                " amplitudes but " + std::to_string(angles.size()) + " angles");
  std::vector<PhasorTerm> terms;
  terms.reserve(amplitudes.size());
  for (std::size_t j = 0; j < amplitudes.size(); ++j)
    terms.push_back({AmplitudeLaw::deterministic(amplitudes[j]), angles[j]});
  const PhasorSum s(std::move(terms));
  const auto z = sample_sum(s, seed, count);
  std::vector<double> out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) out[i] = z[i].real();
  return out;
}

}  // namespace rgauge
