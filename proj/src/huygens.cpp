#include "rgauge/huygens.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rgauge/stats.hpp"

namespace rgauge {
namespace {

using std::numbers::pi;
using cplx = std::complex<double>;

void require_shape(int m, int n, std::size_t entries) {
  if (m < 1 || n < 1) throw std::invalid_argument("gain pattern orders m, n must be >= 1");
  if (entries != static_cast<std::size_t>(m) * static_cast<std::size_t>(n))
    throw std::invalid_argument("gain pattern needs m*n = " + std::to_string(m * n) +
                                " coefficients, got " + std::to_string(entries));
}

// Propagation separates: out_l = offset * S + sum_i cos(i vartheta_l) B_i,
// S = sum_k Psi_k w_k, B_i = sum_k (sum_j a_ij sin(j theta_k)) Psi_k w_k.
std::vector<cplx> apply_kernel(const Wavefront& w, const std::vector<double>& weights,
                               const std::vector<double>& sin_table,
                               const std::vector<double>& cos_table, const GainPattern& g) {
  const std::size_t nodes = w.size();
  const int m = g.cos_orders();
  const int n = g.sin_orders();
  const auto& psi = w.amplitudes();

  cplx total = 0.0;
  std::vector<cplx> b(m, 0.0);
  for (std::size_t k = 0; k < nodes; ++k) {
    const cplx weighted = psi[k] * weights[k];
    total += weighted;
    for (int i = 1; i <= m; ++i) {
      double radial = 0.0;
      for (int j = 1; j <= n; ++j) radial += g.coefficient(i, j) * sin_table[k * n + (j - 1)];
      b[i - 1] += radial * weighted;
    }
  }
  std::vector<cplx> out(nodes);
  for (std::size_t l = 0; l < nodes; ++l) {
    cplx v = g.offset() * total;
    for (int i = 1; i <= m; ++i) v += cos_table[l * m + (i - 1)] * b[i - 1];
    out[l] = v;
  }
  return out;
}

struct Tables {
  std::vector<double> sin_table;
  std::vector<double> cos_table;
};

Tables make_tables(const Wavefront& w, int m, int n) {
  Tables t;
  const auto& grid = w.grid();
  t.sin_table.resize(grid.size() * n);
  t.cos_table.resize(grid.size() * m);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    for (int j = 1; j <= n; ++j) t.sin_table[k * n + (j - 1)] = std::sin(j * grid[k]);
    for (int i = 1; i <= m; ++i) t.cos_table[k * m + (i - 1)] = std::cos(i * grid[k]);
  }
  return t;
}

void require_forward(const Wavefront& w, double t2) {
  if (!std::isfinite(t2) || !(t2 > w.time_stamp()))
    throw std::invalid_argument("propagate: t2 must be later than the wavefront time " +
                                std::to_string(w.time_stamp()));
}

}  // namespace

Wavefront::Wavefront(std::vector<double> grid, std::vector<cplx> amplitudes, double time_stamp)
    : grid_(std::move(grid)), amplitudes_(std::move(amplitudes)), time_stamp_(time_stamp) {
  if (grid_.size() < kMinNodes)
    throw std::invalid_argument("wavefront needs at least 8 nodes, got " +
                                std::to_string(grid_.size()));
  if (amplitudes_.size() != grid_.size())
    throw std::invalid_argument("wavefront has " + std::to_string(grid_.size()) + " nodes but " +
                                std::to_string(amplitudes_.size()) + " amplitudes");
  for (std::size_t k = 0; k < grid_.size(); ++k) {
    if (!(grid_[k] > -pi && grid_[k] <= pi))
      throw std::invalid_argument("wavefront node " + std::to_string(k) + " outside (-pi, pi]");
    if (k > 0 && !(grid_[k] > grid_[k - 1]))
      throw std::invalid_argument("wavefront grid not strictly increasing at node " +
                                  std::to_string(k));
  }
  if (!std::isfinite(time_stamp_)) throw std::invalid_argument("wavefront time is not finite");
}

std::vector<double> Wavefront::uniform_grid(std::size_t n) {
  std::vector<double> g(n);
  for (std::size_t k = 0; k < n; ++k)
    g[k] = -pi + 2.0 * pi * static_cast<double>(k + 1) / static_cast<double>(n);
  g.back() = pi;
  return g;
}

std::vector<double> Wavefront::quadrature_weights() const {
  const std::size_t n = grid_.size();
  std::vector<double> w(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double next = k + 1 < n ? grid_[k + 1] : grid_[0] + 2.0 * pi;
    const double prev = k > 0 ? grid_[k - 1] : grid_[n - 1] - 2.0 * pi;
    w[k] = 0.5 * (next - prev);
  }
  return w;
}

GainPattern GainPattern::constant(double offset) {
  GainPattern g(1, 1, std::vector<double>{0.0}, offset);
  return g;
}

GainPattern::GainPattern(int m, int n, std::vector<double> coefficients, double offset)
    : m_(m), n_(n), coefficients_(std::move(coefficients)), offset_(offset) {
  require_shape(m, n, coefficients_.size());
  for (double c : coefficients_)
    if (!std::isfinite(c)) throw std::invalid_argument("gain coefficient is not finite");
  if (!std::isfinite(offset_)) throw std::invalid_argument("gain offset is not finite");
}

GainPattern::GainPattern(int m, int n, std::vector<AmplitudeLaw> laws, double offset)
    : m_(m), n_(n), offset_(offset) {
  require_shape(m, n, laws.size());
  if (!std::isfinite(offset_)) throw std::invalid_argument("gain offset is not finite");
  coefficients_.reserve(laws.size());
  for (const auto& law : laws) coefficients_.push_back(law.mean());
  laws_ = std::move(laws);
}

GainPattern GainPattern::draw(const CounterRng& rng, std::uint64_t index) const {
  if (!laws_) return *this;
  std::vector<double> a(laws_->size());
  for (std::size_t e = 0; e < a.size(); ++e) a[e] = (*laws_)[e].draw(rng.split(e), index);
  return GainPattern(m_, n_, std::move(a), offset_);
}

double gain_eval(const GainPattern& g, double theta, double vartheta) {
  double sum = g.offset();
  for (int i = 1; i <= g.cos_orders(); ++i) {
    const double ci = std::cos(i * vartheta);
    for (int j = 1; j <= g.sin_orders(); ++j) sum += g.coefficient(i, j) * ci * std::sin(j * theta);
  }
  return sum;
}

Wavefront propagate(const Wavefront& w, const GainPattern& g, double t2) {
  require_forward(w, t2);
  const auto tables = make_tables(w, g.cos_orders(), g.sin_orders());
  auto out = apply_kernel(w, w.quadrature_weights(), tables.sin_table, tables.cos_table, g);
  return Wavefront(w.grid(), std::move(out), t2);
}

EnsembleIntensity ensemble_propagate(const Wavefront& w, const GainPattern& g, double t2,
                                     std::uint64_t seed, std::uint64_t draws) {
  require_forward(w, t2);
  if (draws < kMinEnsembleDraws)
    throw std::invalid_argument("ensemble_propagate: need at least 100 draws, got " +
                                std::to_string(draws));
  const auto tables = make_tables(w, g.cos_orders(), g.sin_orders());
  const auto weights = w.quadrature_weights();
  const CounterRng rng(seed);
  const std::size_t nodes = w.size();

  using Partial = std::vector<RunningMoments>;
  auto partials = run_chunks<Partial>(draws, [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<ShiftedAccumulator> acc(nodes);
    for (std::uint64_t d = begin; d < end; ++d) {
      const auto out = apply_kernel(w, weights, tables.sin_table, tables.cos_table, g.draw(rng, d));
      for (std::size_t l = 0; l < nodes; ++l) acc[l].add(std::norm(out[l]));
    }
    Partial p(nodes);
    for (std::size_t l = 0; l < nodes; ++l) p[l] = acc[l].finish();
    return p;
  });
  std::vector<RunningMoments> total(nodes);
  for (const auto& p : partials)
    for (std::size_t l = 0; l < nodes; ++l) total[l].merge(p[l]);

  EnsembleIntensity r;
  r.draws = draws;
  r.mean.resize(nodes);
  r.variance.resize(nodes);
  for (std::size_t l = 0; l < nodes; ++l) {
    r.mean[l] = total[l].mean;
    r.variance[l] = total[l].sample_variance();
  }
  return r;
}

void write_wavefront_csv(std::ostream& out, const Wavefront& w) {
  out << "theta,re,im\n";
  char buf[128];
  for (std::size_t k = 0; k < w.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", w.grid()[k], w.amplitudes()[k].real(),
                  w.amplitudes()[k].imag());
    out << buf;
  }
}

Wavefront read_wavefront_csv(std::istream& in, double time_stamp) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("wavefront csv: empty input");
  std::vector<double> grid;
  std::vector<cplx> amps;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string a, b, c;
    if (!std::getline(row, a, ',') || !std::getline(row, b, ',') || !std::getline(row, c))
      throw std::invalid_argument("wavefront csv: line " + std::to_string(line_no) +
                                  " needs theta,re,im");
    try {
      grid.push_back(std::stod(a));
      amps.emplace_back(std::stod(b), std::stod(c));
    } catch (const std::exception&) {
      throw std::invalid_argument("wavefront csv: bad number on line " + std::to_string(line_no));
    }
  }
  return Wavefront(std::move(grid), std::move(amps), time_stamp);
}

}  // namespace rgauge
