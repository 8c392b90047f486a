#include "rgauge/sintrans.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "rgauge/error.hpp"
#include "rgauge/specfun.hpp"

namespace rgauge {
namespace {

using cplx = std::complex<double>;
using std::numbers::pi;

// z * i^n, exact.
cplx times_i_power(cplx z, std::int64_t n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return z;
    case 1: return {-z.imag(), z.real()};
    case 2: return -z;
    default: return {z.imag(), -z.real()};
  }
}

// Coefficient of T_n in the density series: E[T_n(sin theta')] with theta'
// the sine-frame angle, = Re((-i)^n CF'(n)).
double density_coefficient(const SinusoidalTransform& t, std::int64_t n) {
  return times_i_power(t.sine_frame_cf(n), -n).real();
}

double algebraic_tail_bound(const AngleDistribution& d, int terms) {
  const double n = static_cast<double>(terms);
  if (d.kind() == AngleKind::Laplace) return 2.0 * d.alpha() * d.alpha() / n;
  return 8.0 / (d.half_width() * d.half_width() * n);
}

}  // namespace

std::string to_string(TrigKind kind) { return kind == TrigKind::Sin ? "sin" : "cos"; }

SinusoidalTransform::SinusoidalTransform(double amplitude, TrigKind kind, AngleDistribution dist)
    : amplitude_(amplitude), kind_(kind), dist_(dist) {
  if (!(amplitude > 0.0) || !std::isfinite(amplitude))
    throw std::invalid_argument("amplitude A must be positive and finite");
}

cplx SinusoidalTransform::sine_frame_cf(std::int64_t n) const {
  const cplx c = dist_.cf(n);
  return kind_ == TrigKind::Sin ? c : times_i_power(c, n);
}

double SinusoidalTransform::apply(double angle) const noexcept {
  return amplitude_ * (kind_ == TrigKind::Sin ? std::sin(angle) : std::cos(angle));
}

cplx cf_series(const SinusoidalTransform& t, double omega, const SeriesControl& ctl) {
  const double z = omega * t.amplitude();
  if (!std::isfinite(z)) throw std::domain_error("cf_series: omega is not finite");
  if (std::abs(z) > kMaxBesselArgument)
    throw std::out_of_range("cf_series: |omega A| = " + std::to_string(std::abs(z)) +
                            " exceeds the Bessel order budget (500)");
  if (z == 0.0) return 1.0;

  // Past |z| + O(|z|^(1/3)) the Bessel factors fall off super-exponentially,
  // so this cutoff bounds the work whatever the angle CF does.
  const double az = std::abs(z);
  const int bessel_cutoff = static_cast<int>(std::ceil(az + 10.0 * std::cbrt(az) + 30.0));
  const int cap = std::min(std::max(ctl.max_order, bessel_cutoff), specfun::kMaxBesselOrder);
  const auto j = specfun::bessel_j_sequence(cap, z);

  cplx sum = j[0];
  int small_run = 0;
  for (int n = 1; n <= cap; ++n) {
    const cplx plus = t.sine_frame_cf(n);
    const cplx minus = t.sine_frame_cf(-n);
    // J_{-n} = (-1)^n J_n
    sum += j[n] * (plus + ((n & 1) ? -minus : minus));
    const double magnitude = std::abs(j[n]) * std::max(std::abs(plus), std::abs(minus));
    small_run = (n > az && magnitude < ctl.tail_tolerance) ? small_run + 1 : 0;
    if (small_run >= 3) break;
  }
  return sum;
}

SeriesValue pdf_series(const SinusoidalTransform& t, double y, const SeriesControl& ctl) {
  if (!std::isfinite(y)) throw std::domain_error("pdf: y is not finite");
  const double a = t.amplitude();
  const double u = y / a;
  if (std::abs(u) > 1.0) return {};

  const bool algebraic = t.dist().has_algebraic_cf_decay();
  const int max_terms = algebraic ? std::max(ctl.max_order, kAlgebraicPdfOrders) : ctl.max_order;

  double numerator = 1.0;
  double t_prev = 1.0;
  double t_cur = u;
  int small_run = 0;
  int n = 1;
  bool converged = false;
  for (; n <= max_terms; ++n) {
    if (n > 1) {
      const double t_next = 2.0 * u * t_cur - t_prev;
      t_prev = t_cur;
      t_cur = t_next;
    }
    numerator += 2.0 * density_coefficient(t, n) * t_cur;
    small_run = std::abs(t.dist().cf(n)) < ctl.tail_tolerance ? small_run + 1 : 0;
    if (small_run >= 3) {
      converged = true;
      break;
    }
  }

  SeriesValue out;
  out.terms = converged ? n : max_terms;
  out.converged = converged;
  const double radial = std::sqrt((1.0 - u) * (1.0 + u));
  if (radial == 0.0) {
    out.value = numerator > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
  } else {
    out.value = numerator / (pi * a * radial);
  }
  if (!converged) {
    double bound;
    if (algebraic) {
      bound = algebraic_tail_bound(t.dist(), max_terms);
    } else {
      const double last = std::abs(t.dist().cf(max_terms));
      const double next = std::abs(t.dist().cf(max_terms + 1));
      const double ratio = last > 0.0 ? next / last : 0.0;
      bound = ratio < 1.0 ? 2.0 * next / (1.0 - ratio) : std::numeric_limits<double>::infinity();
    }
    out.tail_bound = radial == 0.0 ? std::numeric_limits<double>::infinity()
                                   : bound / (pi * a * radial);
  }
  return out;
}

double pdf(const SinusoidalTransform& t, double y, const SeriesControl& ctl) {
  const SeriesValue r = pdf_series(t, y, ctl);
  if (!r.converged && !t.dist().has_algebraic_cf_decay())
    throw SeriesNotConverged("pdf: density series for " + t.dist().spec() +
                                 " did not reach tail tolerance within " +
                                 std::to_string(ctl.max_order) + " terms",
                             r.terms);
  return r.value;
}

double moment_bessel(const SinusoidalTransform& t, int m) {
  if (m < 0 || m > kMaxMomentOrder)
    throw std::out_of_range("moment order " + std::to_string(m) + " outside [0, 12]");
  if (m == 0) return 1.0;

  // Only J_0(0) = 1 survives at omega = 0, so J_n^(m)(0) is nonzero only for
  // n = m - 2k.
  cplx sum = 0.0;
  for (int n = -m; n <= m; n += 2)
    sum += specfun::bessel_j_derivative(n, m, 0.0) * t.sine_frame_cf(n);
  const cplx moment = times_i_power(sum, -m) * std::pow(t.amplitude(), m);

  const double scale = std::pow(t.amplitude(), m);
  if (std::abs(moment.imag()) > 1e-12 * scale)
    throw InternalInconsistency("moment_bessel: imaginary residue " +
                                std::to_string(moment.imag()) + " for m = " + std::to_string(m));
  return moment.real() + 0.0;  // no signed zeros in tables
}

double moment_chebyshev(const SinusoidalTransform& t, int m, const SeriesControl& ctl) {
  if (m < 0 || m > kMaxMomentOrder)
    throw std::out_of_range("moment order " + std::to_string(m) + " outside [0, 12]");
  if (m > ctl.max_order)
    throw std::invalid_argument("moment_chebyshev: max_order below moment order");

  const auto expansion = specfun::power_to_chebyshev(m);
  // Integral of T_k T_k / sqrt(1 - u^2): pi for k = 0, pi/2 otherwise.
  double total = 0.0;
  for (int k = m; k >= 0; k -= 2) {
    const double series_weight = k == 0 ? 1.0 : 2.0 * density_coefficient(t, k);
    const double norm = k == 0 ? pi : 0.5 * pi;
    total += expansion.coefficients[k] * series_weight * norm / pi;
  }
  return std::pow(t.amplitude(), m) * total;
}

double std_dev(const SinusoidalTransform& t) {
  const double m1 = moment_bessel(t, 1);
  const double m2 = moment_bessel(t, 2);
  const double var = m2 - m1 * m1;
  const double a2 = t.amplitude() * t.amplitude();
  if (var < -1e-12 * a2)
    throw InternalInconsistency("std_dev: negative variance " + std::to_string(var));
  return std::sqrt(std::max(0.0, var));
}

}  // namespace rgauge
