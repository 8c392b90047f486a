#pragma once

#include <complex>
#include <cstdint>

#include "rgauge/angles.hpp"
#include "rgauge/phasors.hpp"
#include "rgauge/stats.hpp"

namespace rgauge {

/// A two-path phase effect with deterministic phase coupling * flux and a
/// multiplicative phase-noise factor exp(i theta). The coupling absorbs
/// e/(hbar c) for the magnetic case, or the phenomenological constant over
/// hbar for the Aharonov-Casher and gravitational analogues.
struct FluxPhenomenon {
  double coupling = 1.0;
  double flux = 0.0;
  AngleDistribution noise = AngleDistribution::point_mass();

  FluxPhenomenon(double coupling, double flux, AngleDistribution noise);
};

/// Solenoid current I0 cos(omega0 t + n) with phase noise n.
struct NoisyCurrent {
  double amplitude = 1.0;
  double angular_frequency = 1.0;
  AngleDistribution noise = AngleDistribution::point_mass();

  NoisyCurrent(double amplitude, double angular_frequency, AngleDistribution noise);
};

/// Deterministic S1 - S2 = coupling * flux, in radians.
double phase_difference(const FluxPhenomenon& p);

/// E[coupling * flux * exp(i theta)] = coupling * flux * CF(1).
std::complex<double> random_shift_mean(const FluxPhenomenon& p);

struct ShiftVariance {
  /// coupling * flux * (1 - Re CF(2)) * (1 + i): the published bracket, with
  /// its linear prefactor and the sine bracket on both components.
  ComplexVariance paper_form;
  /// (coupling * flux)^2 * (Var cos theta + i Var sin theta).
  ComplexVariance exact_form;
};

ShiftVariance random_shift_variance(const FluxPhenomenon& p);

inline constexpr std::uint64_t kMinVisibilityCount = 10'000;
inline constexpr int kMinVisibilityGrid = 64;

struct Visibility {
  double analytic = 0.0;
  double empirical = 0.0;
  double std_error = 0.0;
};

/// Fringe contrast of the ensemble-averaged intensity
/// I(phi) = <|exp(i(phi + theta)) + 1|^2> / 4 over a uniform phi grid.
/// The analytic value is |CF(1)|.
Visibility fringe_visibility(const AngleDistribution& noise, std::uint64_t seed,
                             std::uint64_t count, int grid_points = 360);

/// Ensemble-averaged intensity at each grid phase, from `count` noise draws.
std::vector<double> ensemble_intensity(const AngleDistribution& noise, std::uint64_t seed,
                                       std::uint64_t count, int grid_points);

/// One draw of I0 cos(omega0 t + n).
double noisy_current(const NoisyCurrent& c, double t, std::uint64_t seed);

/// Mean over `count` independent draws; analytic value I0 Re(CF(1) e^{i omega0 t}).
McEstimate<double> noisy_current_mean(const NoisyCurrent& c, double t, std::uint64_t seed,
                                      std::uint64_t count);
double noisy_current_expected(const NoisyCurrent& c, double t);

inline constexpr std::uint64_t kMaxMetricCount = 10'000'000;

/// Max |x^2 + y^2 + z^2 - r^2| over random direction angles
/// (theta uniform on (-pi, pi], phi uniform on (0, pi)).
double metric_invariance(double r, std::uint64_t seed, std::uint64_t count);

/// Analytic and Monte Carlo statistics of scale * exp(i theta).
struct PhaseStats {
  std::complex<double> analytic_mean;
  ShiftVariance analytic_variance;
  McEstimate<std::complex<double>> mc_mean;
  /// Var(Re) + i Var(Im) of the draws, with per-component standard errors.
  ComplexVariance mc_variance;
  double mc_variance_se_re = 0.0;
  double mc_variance_se_im = 0.0;
};

PhaseStats random_shift_stats(const FluxPhenomenon& p, std::uint64_t seed, std::uint64_t count);

/// Statistics of s exp(i sigma) for a random metric phase sigma drawn from
/// `noise`; the same contract as random_shift_stats with coupling * flux = s.
PhaseStats metric_phase(double s, const AngleDistribution& noise, std::uint64_t seed,
                        std::uint64_t count);

}  // namespace rgauge
