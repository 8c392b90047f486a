#include "rgauge/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rgauge::specfun {
namespace {

constexpr double kRescaleAbove = 1e250;
constexpr double kRescaleBy = 1e-250;

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw std::domain_error(std::string(what) + ": argument is not finite");
}

void require_order(int n) {
  if (n > kMaxBesselOrder || n < -kMaxBesselOrder)
    throw std::out_of_range("bessel order " + std::to_string(n) + " outside [-" +
                            std::to_string(kMaxBesselOrder) + ", " +
                            std::to_string(kMaxBesselOrder) + "]");
}

// Two-term power series; relative error below (x/2)^4 / 2 for x < 1e-6.
std::vector<double> tiny_argument_sequence(int max_order, double x) {
  std::vector<double> out(max_order + 1, 0.0);
  const double half = 0.5 * x;
  const double q = half * half;
  double lead = 1.0;  // (x/2)^n / n!
  for (int n = 0; n <= max_order; ++n) {
    if (n > 0) lead *= half / n;
    out[n] = lead * (1.0 - q / (n + 1));
  }
  return out;
}

// J_0..J_max at x >= 0.
std::vector<double> sequence_nonnegative(int max_order, double x) {
  if (x == 0.0) {
    std::vector<double> out(max_order + 1, 0.0);
    out[0] = 1.0;
    return out;
  }
  if (x < 1e-6) return tiny_argument_sequence(max_order, x);

  std::vector<double> out(max_order + 1, 0.0);
  const double reach = std::max(static_cast<double>(max_order), x);
  int start = static_cast<int>(std::ceil(reach + std::sqrt(40.0 * reach))) + 16;
  start += start & 1;

  double above = 0.0;    // J_{k+1}
  double current = 1.0;  // J_k, unnormalised
  double norm = 2.0 * current;
  for (int k = start; k >= 1; --k) {
    const double below = (2.0 * k / x) * current - above;
    above = current;
    current = below;
    const int order = k - 1;
    if (order <= max_order) out[order] = current;
    if (order % 2 == 0) norm += (order == 0 ? 1.0 : 2.0) * current;
    if (std::abs(current) > kRescaleAbove) {
      current *= kRescaleBy;
      above *= kRescaleBy;
      norm *= kRescaleBy;
      for (int j = order; j <= max_order; ++j) out[j] *= kRescaleBy;
    }
  }
  for (double& v : out) v /= norm;
  return out;
}

double odd_sign(int n) { return (n & 1) ? -1.0 : 1.0; }

}  // namespace

std::vector<double> bessel_j_sequence(int max_order, double x) {
  require_finite(x, "bessel_j_sequence");
  if (max_order < 0) throw std::out_of_range("bessel_j_sequence: negative max_order");
  require_order(max_order);
  auto out = sequence_nonnegative(max_order, std::abs(x));
  if (x < 0.0)
    for (int n = 1; n <= max_order; n += 2) out[n] = -out[n];
  return out;
}

double bessel_j(int n, double x) {
  require_finite(x, "bessel_j");
  require_order(n);
  const int m = n < 0 ? -n : n;
  double v = sequence_nonnegative(m, std::abs(x))[m];
  if (n < 0) v *= odd_sign(m);
  if (x < 0.0) v *= odd_sign(m);
  return v;
}

double bessel_j_derivative(int p, int derivative_order, double x) {
  require_finite(x, "bessel_j_derivative");
  if (derivative_order < 0 || derivative_order > kMaxDerivativeOrder)
    throw std::out_of_range("bessel_j_derivative: derivative order " +
                            std::to_string(derivative_order) + " outside [0, " +
                            std::to_string(kMaxDerivativeOrder) + "]");
  const int lo = p - derivative_order;
  const int hi = p + derivative_order;
  require_order(lo);
  require_order(hi);
  const int reach = std::max(std::abs(lo), std::abs(hi));
  const auto j = bessel_j_sequence(reach, x);
  auto at = [&](int order) {
    return order >= 0 ? j[order] : odd_sign(-order) * j[-order];
  };

  double sum = 0.0;
  for (int k = 0; k <= derivative_order; ++k) {
    const double c = static_cast<double>(binomial(derivative_order, k));
    sum += odd_sign(k) * c * at(lo + 2 * k);
  }
  return std::ldexp(sum, -derivative_order);
}

double chebyshev_t(int n, double x) {
  require_finite(x, "chebyshev_t");
  if (n < 0 || n > kMaxChebyshevOrder)
    throw std::out_of_range("chebyshev_t: order " + std::to_string(n) + " outside [0, " +
                            std::to_string(kMaxChebyshevOrder) + "]");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::uint64_t binomial(int n, int k) {
  if (n < 0 || n > kMaxPowerDegree)
    throw std::out_of_range("binomial: n = " + std::to_string(n) + " outside [0, 64]");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  // Pascal's rule keeps every intermediate at most C(64, 32) < 2^64.
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = std::min(i, k); j >= 1; --j) row[j] += row[j - 1];
  return row[k];
}

double ChebyshevExpansion::evaluate(double x) const {
  double sum = 0.0;
  for (int k = degree; k >= 0; k -= 2) sum += coefficients[k] * chebyshev_t(k, x);
  return sum;
}

ChebyshevExpansion power_to_chebyshev(int n) {
  if (n < 0 || n > kMaxPowerDegree)
    throw std::out_of_range("power_to_chebyshev: degree " + std::to_string(n) +
                            " outside [0, " + std::to_string(kMaxPowerDegree) + "]");
  ChebyshevExpansion e;
  e.degree = n;
  e.coefficients.assign(n + 1, 0.0);
  for (int k = 0; 2 * k <= n; ++k) {
    double c = std::ldexp(static_cast<double>(binomial(n, k)), 1 - n);
    if (n - 2 * k == 0) c *= 0.5;
    e.coefficients[n - 2 * k] = c;
  }
  return e;
}

double gauss_chebyshev(const std::function<double(double)>& f, int nodes) {
  if (nodes < 1) throw std::invalid_argument("gauss_chebyshev: need at least one node");
  double sum = 0.0;
  for (int k = 1; k <= nodes; ++k)
    sum += f(std::cos((2.0 * k - 1.0) * std::numbers::pi / (2.0 * nodes)));
  return std::numbers::pi * sum / nodes;
}

}  // namespace rgauge::specfun
