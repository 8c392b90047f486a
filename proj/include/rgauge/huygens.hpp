#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "rgauge/phasors.hpp"

namespace rgauge {

/// Complex amplitudes on a periodic angular grid.
class Wavefront {
 public:
  static constexpr std::size_t kMinNodes = 8;

  /// `grid` must be strictly increasing inside (-pi, pi] with at least 8 nodes.
  Wavefront(std::vector<double> grid, std::vector<std::complex<double>> amplitudes,
            double time_stamp = 0.0);

  /// n equally spaced nodes -pi + 2 pi (k + 1) / n, k = 0..n-1.
  static std::vector<double> uniform_grid(std::size_t n);

  const std::vector<double>& grid() const noexcept { return grid_; }
  const std::vector<std::complex<double>>& amplitudes() const noexcept { return amplitudes_; }
  double time_stamp() const noexcept { return time_stamp_; }
  std::size_t size() const noexcept { return grid_.size(); }

  /// Periodic trapezoid weights (theta_{k+1} - theta_{k-1}) / 2 with wraparound.
  std::vector<double> quadrature_weights() const;

 private:
  std::vector<double> grid_;
  std::vector<std::complex<double>> amplitudes_;
  double time_stamp_;
};

/// G(theta, vartheta) = offset + sum_{i=1..m} sum_{j=1..n} a_ij cos(i vartheta) sin(j theta).
/// With a coefficient law the a_ij are random; `coefficients` then holds
/// the law means and is ignored by ensemble_propagate.
class GainPattern {
 public:
  static GainPattern constant(double offset);
  /// `coefficients` is row-major m x n.
  GainPattern(int m, int n, std::vector<double> coefficients, double offset = 0.0);
  GainPattern(int m, int n, std::vector<AmplitudeLaw> laws, double offset = 0.0);

  int cos_orders() const noexcept { return m_; }
  int sin_orders() const noexcept { return n_; }
  double offset() const noexcept { return offset_; }
  const std::vector<double>& coefficients() const noexcept { return coefficients_; }
  const std::optional<std::vector<AmplitudeLaw>>& laws() const noexcept { return laws_; }
  bool is_random() const noexcept { return laws_.has_value(); }

  double coefficient(int i, int j) const { return coefficients_[(i - 1) * n_ + (j - 1)]; }

  /// Deterministic pattern with coefficients drawn from the laws;
  /// entry e of draw d uses stream split(e) of `rng`, counter d.
  GainPattern draw(const CounterRng& rng, std::uint64_t index) const;

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<double> coefficients_;
  std::optional<std::vector<AmplitudeLaw>> laws_;
  double offset_ = 0.0;
};

double gain_eval(const GainPattern& g, double theta, double vartheta);

/// Psi(vartheta_l, t2) = sum_k G(theta_k, vartheta_l) Psi(theta_k, t1) w_k
/// on the input grid. Requires t2 > w.time_stamp().
Wavefront propagate(const Wavefront& w, const GainPattern& g, double t2);

struct EnsembleIntensity {
  std::vector<double> mean;
  std::vector<double> variance;
  std::uint64_t draws = 0;
};

inline constexpr std::uint64_t kMinEnsembleDraws = 100;

/// Per-node mean and variance of |Psi'|^2 over random gain draws.
EnsembleIntensity ensemble_propagate(const Wavefront& w, const GainPattern& g, double t2,
                                     std::uint64_t seed, std::uint64_t draws);

/// CSV with header "theta,re,im", 17 significant digits.
void write_wavefront_csv(std::ostream& out, const Wavefront& w);
Wavefront read_wavefront_csv(std::istream& in, double time_stamp = 0.0);

}  // namespace rgauge
