#include "rgauge/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rgauge {
namespace {

using std::numbers::pi;

void require_count(std::uint64_t count, std::uint64_t min, const char* op) {
  if (count < min)
    throw std::invalid_argument(std::string(op) + ": count " + std::to_string(count) +
                                " below minimum " + std::to_string(min));
  if (count > kMaxSampleCount)
    throw std::length_error(std::string(op) + ": count " + std::to_string(count) +
                            " exceeds 1e8");
}

}  // namespace

FluxPhenomenon::FluxPhenomenon(double coupling_, double flux_, AngleDistribution noise_)
    : coupling(coupling_), flux(flux_), noise(noise_) {
  if (!(coupling > 0.0) || !std::isfinite(coupling))
    throw std::invalid_argument("coupling must be positive and finite");
  if (!std::isfinite(flux)) throw std::invalid_argument("flux must be finite");
}

NoisyCurrent::NoisyCurrent(double amplitude_, double angular_frequency_, AngleDistribution noise_)
    : amplitude(amplitude_), angular_frequency(angular_frequency_), noise(noise_) {
  if (!(amplitude > 0.0) || !std::isfinite(amplitude))
    throw std::invalid_argument("current amplitude I0 must be positive and finite");
  if (!(angular_frequency > 0.0) || !std::isfinite(angular_frequency))
    throw std::invalid_argument("angular frequency omega0 must be positive and finite");
}

double phase_difference(const FluxPhenomenon& p) { return p.coupling * p.flux; }

std::complex<double> random_shift_mean(const FluxPhenomenon& p) {
  return phase_difference(p) * p.noise.cf(1);
}

ShiftVariance random_shift_variance(const FluxPhenomenon& p) {
  const double shift = phase_difference(p);
  const double bracket = 1.0 - p.noise.cf(2).real();
  ShiftVariance v;
  v.paper_form = {shift * bracket, shift * bracket};
  v.exact_form = shift * shift * ComplexVariance(cos_variance(p.noise), sin_variance(p.noise));
  return v;
}

namespace {

struct TrigMeans {
  double cos = 0.0;
  double sin = 0.0;
};

TrigMeans trig_means(const AngleDistribution& noise, const CounterRng& rng, std::uint64_t count) {
  const auto m = chunked_moments<2>(count, [&](std::uint64_t i, std::array<double, 2>& out) {
    const double theta = noise.draw(rng, i);
    out[0] = std::cos(theta);
    out[1] = std::sin(theta);
  });
  return {m[0].mean, m[1].mean};
}

// Per draw |e^{i(phi+theta)} + 1|^2 / 4 = (1 + cos(phi + theta)) / 2, so the
// ensemble average is linear in the sample means of cos and sin.
std::vector<double> intensity_grid(const TrigMeans& m, int grid_points) {
  std::vector<double> intensity(grid_points);
  for (int k = 0; k < grid_points; ++k) {
    const double phi = 2.0 * pi * k / grid_points;
    intensity[k] = 0.5 * (1.0 + std::cos(phi) * m.cos - std::sin(phi) * m.sin);
  }
  return intensity;
}

}  // namespace

std::vector<double> ensemble_intensity(const AngleDistribution& noise, std::uint64_t seed,
                                       std::uint64_t count, int grid_points) {
  require_count(count, 1, "ensemble_intensity");
  if (grid_points < 1) throw std::invalid_argument("ensemble_intensity: empty phase grid");
  return intensity_grid(trig_means(noise, CounterRng(seed), count), grid_points);
}

Visibility fringe_visibility(const AngleDistribution& noise, std::uint64_t seed,
                             std::uint64_t count, int grid_points) {
  require_count(count, kMinVisibilityCount, "fringe_visibility");
  if (grid_points < kMinVisibilityGrid)
    throw std::invalid_argument("fringe_visibility: phase grid needs at least 64 points");

  const CounterRng rng(seed);
  const TrigMeans means = trig_means(noise, rng, count);
  const auto intensity = intensity_grid(means, grid_points);
  const auto [lo, hi] = std::minmax_element(intensity.begin(), intensity.end());

  Visibility v;
  v.analytic = std::abs(noise.cf(1));
  v.empirical = (*hi - *lo) / (*hi + *lo);

  // Delta method: the contrast tracks |mean exp(i theta)|, whose fluctuation
  // is the projection of exp(i theta) on the direction of the mean.
  const double direction = std::atan2(means.sin, means.cos);
  const auto proj = chunked_moments<1>(count, [&](std::uint64_t i, std::array<double, 1>& out) {
    out[0] = std::cos(noise.draw(rng, i) - direction);
  });
  v.std_error = proj[0].std_error();
  return v;
}

double noisy_current(const NoisyCurrent& c, double t, std::uint64_t seed) {
  const double n = c.noise.draw(CounterRng(seed), 0);
  return c.amplitude * std::cos(c.angular_frequency * t + n);
}

McEstimate<double> noisy_current_mean(const NoisyCurrent& c, double t, std::uint64_t seed,
                                      std::uint64_t count) {
  require_count(count, 1, "noisy_current_mean");
  const CounterRng rng(seed);
  const double phase = c.angular_frequency * t;
  const auto m = chunked_moments<1>(count, [&](std::uint64_t i, std::array<double, 1>& out) {
    out[0] = c.amplitude * std::cos(phase + c.noise.draw(rng, i));
  });
  return {m[0].mean, m[0].std_error(), count, seed};
}

double noisy_current_expected(const NoisyCurrent& c, double t) {
  const auto rot = std::polar(1.0, c.angular_frequency * t);
  return c.amplitude * (c.noise.cf(1) * rot).real();
}

double metric_invariance(double r, std::uint64_t seed, std::uint64_t count) {
  if (!(r >= 0.0) || !std::isfinite(r))
    throw std::invalid_argument("metric_invariance: r must be non-negative and finite");
  if (count > kMaxMetricCount)
    throw std::length_error("metric_invariance: count " + std::to_string(count) +
                            " exceeds 1e7");
  const CounterRng rng(seed);
  const double r2 = r * r;
  auto partial = run_chunks<double>(count, [&](std::uint64_t begin, std::uint64_t end) {
    double worst = 0.0;
    for (std::uint64_t i = begin; i < end; ++i) {
      const double theta = pi - 2.0 * pi * rng.uniform(2 * i);
      const double phi = pi * rng.uniform_open(2 * i + 1);
      const double x = r * std::cos(theta) * std::sin(phi);
      const double y = r * std::sin(theta) * std::sin(phi);
      const double z = r * std::cos(phi);
      worst = std::max(worst, std::abs(x * x + y * y + z * z - r2));
    }
    return worst;
  });
  double worst = 0.0;
  for (double w : partial) worst = std::max(worst, w);
  return worst;
}

PhaseStats random_shift_stats(const FluxPhenomenon& p, std::uint64_t seed, std::uint64_t count) {
  require_count(count, 2, "random_shift_stats");
  const double scale = phase_difference(p);
  const CounterRng rng(seed);

  const auto first = chunked_moments<2>(count, [&](std::uint64_t i, std::array<double, 2>& out) {
    const double theta = p.noise.draw(rng, i);
    out[0] = scale * std::cos(theta);
    out[1] = scale * std::sin(theta);
  });
  const double mre = first[0].mean;
  const double mim = first[1].mean;
  const auto second = chunked_moments<2>(count, [&](std::uint64_t i, std::array<double, 2>& out) {
    const double theta = p.noise.draw(rng, i);
    const double dre = scale * std::cos(theta) - mre;
    const double dim = scale * std::sin(theta) - mim;
    out[0] = dre * dre;
    out[1] = dim * dim;
  });

  PhaseStats s;
  s.analytic_mean = random_shift_mean(p);
  s.analytic_variance = random_shift_variance(p);
  s.mc_mean = {{mre, mim},
               std::sqrt((first[0].sample_variance() + first[1].sample_variance()) /
                         static_cast<double>(count)),
               count,
               seed};
  s.mc_variance = {second[0].mean, second[1].mean};
  s.mc_variance_se_re = second[0].std_error();
  s.mc_variance_se_im = second[1].std_error();
  return s;
}

PhaseStats metric_phase(double s, const AngleDistribution& noise, std::uint64_t seed,
                        std::uint64_t count) {
  if (!(s > 0.0)) throw std::invalid_argument("metric_phase: s must be positive");
  return random_shift_stats(FluxPhenomenon(1.0, s, noise), seed, count);
}

}  // namespace rgauge
