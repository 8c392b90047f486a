#pragma once

#include <complex>
#include <cstdint>

#include "rgauge/angles.hpp"

namespace rgauge {

enum class TrigKind { Sin, Cos };

std::string to_string(TrigKind kind);

/// The random variable A sin(theta) or A cos(theta); support [-A, A].
class SinusoidalTransform {
 public:
  SinusoidalTransform(double amplitude, TrigKind kind, AngleDistribution dist);

  double amplitude() const noexcept { return amplitude_; }
  TrigKind kind() const noexcept { return kind_; }
  const AngleDistribution& dist() const noexcept { return dist_; }

  /// CF of the angle as seen by the sine form. For Cos this is the angle
  /// shifted by +pi/2 (sin(theta + pi/2) = cos theta): i^n CF(n).
  std::complex<double> sine_frame_cf(std::int64_t n) const;

  double apply(double angle) const noexcept;

 private:
  double amplitude_;
  TrigKind kind_;
  AngleDistribution dist_;
};

/// Truncation policy for the Bessel and Chebyshev series.
struct SeriesControl {
  int max_order = 64;
  double tail_tolerance = 1e-12;
};

/// Algebraically decaying CFs (Laplace, Triangular) are summed to this
/// many terms in the density series regardless of max_order.
inline constexpr int kAlgebraicPdfOrders = 512;
inline constexpr double kMaxBesselArgument = 500.0;

/// E[exp(i omega X)] as a Jacobi-Anger series, sum_n J_n(omega A) CF(n)
/// (with i^n weights for Cos).
std::complex<double> cf_series(const SinusoidalTransform& t, double omega,
                               const SeriesControl& ctl = {});

struct SeriesValue {
  double value = 0.0;
  int terms = 0;
  bool converged = true;
  /// Bound on the magnitude of the omitted terms; 0 when converged.
  double tail_bound = 0.0;
};

/// Density from the Chebyshev series
///   f(y) = [1 + 2 sum_n c_n T_n(y/A)] / (pi A sqrt(1 - (y/A)^2)),
///   c_n = E[T_n(X/A)].
/// Returns the truncation diagnostics instead of throwing.
SeriesValue pdf_series(const SinusoidalTransform& t, double y, const SeriesControl& ctl = {});

/// As pdf_series. Throws SeriesNotConverged when a geometrically decaying
/// series fails to converge within max_order; algebraically decaying ones
/// are truncated at kAlgebraicPdfOrders terms (see pdf_series for the bound).
/// Zero outside [-A, A]; +inf on the boundary when the density diverges there.
double pdf(const SinusoidalTransform& t, double y, const SeriesControl& ctl = {});

inline constexpr int kMaxMomentOrder = 12;

/// <X^m> by differentiating the Bessel series at omega = 0:
///   i^-m A^m sum_n J_n^(m)(0) CF(n).
double moment_bessel(const SinusoidalTransform& t, int m);

/// <X^m> by expanding y^m in Chebyshev polynomials and pairing with the
/// density series through orthogonality.
double moment_chebyshev(const SinusoidalTransform& t, int m, const SeriesControl& ctl = {});

double std_dev(const SinusoidalTransform& t);

}  // namespace rgauge
