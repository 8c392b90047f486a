#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rgauge/rng.hpp"

namespace rgauge {

enum class AngleKind { Uniform, GaussianZeroMean, Gaussian, Laplace, Cauchy, Triangular };

std::string to_string(AngleKind kind);

/// A random angle with a closed-form characteristic function at integer
/// arguments, CF(n) = E[exp(i n theta)].
///
/// Supports:
///   Uniform            on (-pi, pi]
///   GaussianZeroMean   N(0, sigma^2); sigma = 0 is a point mass at 0
///   Gaussian           N(mean, sigma^2); sigma = 0 is a point mass at mean
///   Laplace            density (alpha/2) exp(-alpha |theta|), unwrapped
///   Cauchy             density (alpha/pi) / (alpha^2 + theta^2), unwrapped
///   Triangular         symmetric triangle on [-a, a], 0 < a <= pi
///
/// Sampled angles are not wrapped onto the circle; only sin/cos of them is
/// ever used.
class AngleDistribution {
 public:
  static AngleDistribution uniform();
  static AngleDistribution gaussian_zero_mean(double sigma);
  static AngleDistribution gaussian(double sigma, double mean);
  static AngleDistribution laplace(double alpha);
  static AngleDistribution cauchy(double alpha);
  static AngleDistribution triangular(double half_width);
  /// Degenerate Gaussian; every draw equals `at`.
  static AngleDistribution point_mass(double at = 0.0);

  AngleKind kind() const noexcept { return kind_; }
  double sigma() const noexcept { return sigma_; }
  double mean() const noexcept { return mean_; }
  double alpha() const noexcept { return alpha_; }
  double half_width() const noexcept { return half_width_; }

  /// True iff CF(n) is real for every n.
  bool is_symmetric() const noexcept;
  /// True when |CF(n)| decays only algebraically (Laplace, Triangular).
  bool has_algebraic_cf_decay() const noexcept;

  std::complex<double> cf(std::int64_t n) const;

  /// Draw number `index` of the stream `rng`; consumes counters 2*index and 2*index+1.
  double draw(const CounterRng& rng, std::uint64_t index) const;

  /// Mini-syntax form, e.g. "gaussian:sigma=1,theta0=0.5".
  std::string spec() const;

  friend bool operator==(const AngleDistribution&, const AngleDistribution&) = default;

 private:
  AngleDistribution(AngleKind kind, double sigma, double mean, double alpha, double half_width)
      : kind_(kind), sigma_(sigma), mean_(mean), alpha_(alpha), half_width_(half_width) {}

  AngleKind kind_;
  double sigma_;
  double mean_;
  double alpha_;
  double half_width_;
};

inline std::complex<double> cf(const AngleDistribution& dist, std::int64_t n) { return dist.cf(n); }

inline constexpr std::uint64_t kMaxSampleCount = 100'000'000;

/// Deterministic in (seed, count); draw i is independent of count.
std::vector<double> sample(const AngleDistribution& dist, std::uint64_t seed, std::uint64_t count);

/// (1/N) sum exp(i n theta_k).
std::complex<double> empirical_cf(std::span<const double> samples, std::int64_t n);

}  // namespace rgauge
