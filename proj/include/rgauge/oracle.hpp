#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "rgauge/phasors.hpp"
#include "rgauge/sintrans.hpp"
#include "rgauge/stats.hpp"

namespace rgauge {

inline constexpr std::uint64_t kMinOracleCount = 1000;

/// Sample mean of (A trig(theta))^m with its standard error.
McEstimate<double> estimate_moment(const SinusoidalTransform& t, int m, std::uint64_t seed,
                                   std::uint64_t count);

/// Moments 1..max_m from one pass over the same draws; element k holds m = k + 1.
std::vector<McEstimate<double>> estimate_moments(const SinusoidalTransform& t, int max_m,
                                                 std::uint64_t seed, std::uint64_t count);

/// Sample mean of exp(i omega A trig(theta)).
McEstimate<std::complex<double>> estimate_cf(const SinusoidalTransform& t, double omega,
                                             std::uint64_t seed, std::uint64_t count);

struct PhasorEstimate {
  McEstimate<std::complex<double>> mean;
  /// Var(Re z) + i Var(Im z); std_error_re / std_error_im per component.
  ComplexVariance variance;
  double std_error_re = 0.0;
  double std_error_im = 0.0;
};

/// Two passes over the same draws of the phasor sum: mean, then variance.
PhasorEstimate estimate_phasor(const PhasorSum& s, std::uint64_t seed, std::uint64_t count);

}  // namespace rgauge
