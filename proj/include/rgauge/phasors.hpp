#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rgauge/angles.hpp"
#include "rgauge/rng.hpp"

namespace rgauge {

/// Law of a random amplitude.
class AmplitudeLaw {
 public:
  enum class Kind { Deterministic, Uniform, Gaussian };

  static AmplitudeLaw deterministic(double value);
  static AmplitudeLaw uniform(double lo, double hi);
  static AmplitudeLaw gaussian(double mean, double std);

  Kind kind() const noexcept { return kind_; }
  double first() const noexcept { return p0_; }
  double second() const noexcept { return p1_; }

  double mean() const noexcept;
  double second_moment() const noexcept;
  double variance() const noexcept;

  double draw(const CounterRng& rng, std::uint64_t index) const;

  /// Mini-syntax form: "det:value=1", "uniform:lo=0,hi=1", "gaussian:mean=0,std=1".
  std::string spec() const;

  friend bool operator==(const AmplitudeLaw&, const AmplitudeLaw&) = default;

 private:
  AmplitudeLaw(Kind kind, double p0, double p1) : kind_(kind), p0_(p0), p1_(p1) {}

  Kind kind_;
  double p0_;
  double p1_;
};

struct PhasorTerm {
  AmplitudeLaw amplitude;
  AngleDistribution angle;
};

/// z = sum_j A_j exp(i theta_j) with every A_j and theta_j independent.
class PhasorSum {
 public:
  explicit PhasorSum(std::vector<PhasorTerm> terms);

  const std::vector<PhasorTerm>& terms() const noexcept { return terms_; }

 private:
  std::vector<PhasorTerm> terms_;
};

/// Var(Re z) + i Var(Im z); a bookkeeping pair, not a complex covariance.
using ComplexVariance = std::complex<double>;

/// Var(cos theta) and Var(sin theta) from CF(1) and CF(2).
double cos_variance(const AngleDistribution& d);
double sin_variance(const AngleDistribution& d);

std::complex<double> sum_mean(const PhasorSum& s);

/// sum Var(A_j) Var(cos theta_j) + i sum Var(A_j) Var(sin theta_j).
/// Correct only when E[A_j] = 0 or the trig means vanish.
ComplexVariance sum_variance_paper(const PhasorSum& s);

/// Variance of independent products: E[A^2]E[cos^2] - E[A]^2 E[cos]^2, etc.
ComplexVariance sum_variance_exact(const PhasorSum& s);

/// Term j draws its amplitude from split(2j) and angle from split(2j+1) of
/// the seed stream; draw i uses counter i of each.
std::complex<double> draw_sum(const PhasorSum& s, const CounterRng& root, std::uint64_t index);

std::vector<std::complex<double>> sample_sum(const PhasorSum& s, std::uint64_t seed,
                                             std::uint64_t count);

/// Draws of sum_j r_j cos(theta_j); identical to Re(sample_sum) with
/// deterministic amplitudes r_j.
std::vector<double> cos_sum_eval(std::span<const double> amplitudes,
                                 std::span<const AngleDistribution> angles, std::uint64_t seed,
                                 std::uint64_t count);

}  // namespace rgauge
