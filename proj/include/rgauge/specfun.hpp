#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace rgauge::specfun {

/// Largest |order| accepted by the Bessel routines.
inline constexpr int kMaxBesselOrder = 1024;
inline constexpr int kMaxDerivativeOrder = 12;
inline constexpr int kMaxChebyshevOrder = 512;
inline constexpr int kMaxPowerDegree = 64;

/// Bessel function of the first kind J_n(x) for integer n.
///
/// Uses Miller's backward recurrence normalised by J_0 + 2 sum J_2k = 1.
/// Negative orders and arguments are mapped through J_{-n} = (-1)^n J_n
/// and J_n(-x) = (-1)^n J_n(x), so both parities hold exactly.
double bessel_j(int n, double x);

/// J_0(x), ..., J_{max_order}(x) from a single recurrence.
std::vector<double> bessel_j_sequence(int max_order, double x);

/// N-th derivative of J_p: 2^-N sum_k (-1)^k C(N,k) J_{p-N+2k}(x).
double bessel_j_derivative(int p, int derivative_order, double x);

/// Chebyshev polynomial of the first kind by three-term recurrence.
double chebyshev_t(int n, double x);

/// x^degree written in the Chebyshev basis.
struct ChebyshevExpansion {
  int degree = 0;
  /// coefficients[k] multiplies T_k; entries of the wrong parity are zero.
  std::vector<double> coefficients;

  double evaluate(double x) const;
};

ChebyshevExpansion power_to_chebyshev(int n);

/// Exact binomial coefficient for n <= 64.
std::uint64_t binomial(int n, int k);

/// Gauss-Chebyshev rule: integral over (-1,1) of f(y)/sqrt(1-y^2).
double gauss_chebyshev(const std::function<double(double)>& f, int nodes);

}  // namespace rgauge::specfun
