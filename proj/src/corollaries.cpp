#include "rgauge/corollaries.hpp"

#include <cmath>

#include "rgauge/oracle.hpp"

namespace rgauge {

std::optional<double> printed_moment(const SinusoidalTransform& t, int m) {
  const auto& d = t.dist();
  const double a = t.amplitude();
  const double a2 = a * a;
  const double a4 = a2 * a2;

  switch (d.kind()) {
    case AngleKind::GaussianZeroMean: {
      const double s2 = d.sigma() * d.sigma();
      switch (m) {
        case 1: return 0.0;
        case 2: return a2 / 2.0 * (1.0 - std::exp(-2.0 * s2));
        case 3: return 0.0;
        case 4: return a4 / 8.0 * (std::exp(-8.0 * s2) - 4.0 * std::exp(-2.0 * s2) + 3.0);
      }
      return std::nullopt;
    }
    case AngleKind::Gaussian: {
      const double s2 = d.sigma() * d.sigma();
      const double t0 = d.mean();
      switch (m) {
        case 1: return 2.0 * std::exp(-s2 / 2.0) * std::cos(t0) * a;
        case 2: return 2.0 * (1.0 - std::exp(-2.0 * s2) * std::cos(2.0 * t0)) * a2;
        case 4:
          return a4 / 8.0 *
                 (std::exp(-8.0 * s2) * std::cos(4.0 * t0) -
                  4.0 * std::exp(-2.0 * s2) * std::cos(2.0 * t0) + 6.0);
      }
      return std::nullopt;
    }
    case AngleKind::Laplace: {
      const double al2 = d.alpha() * d.alpha();
      switch (m) {
        case 1: return 0.0;
        case 2: return 2.0 * a2 * (1.0 - al2 / (al2 + 4.0));
        case 4: return a4 / 8.0 * (al2 / (al2 + 16.0) - 4.0 * al2 / (al2 + 4.0) + 6.0);
      }
      return std::nullopt;
    }
    case AngleKind::Cauchy: {
      const double al = d.alpha();
      switch (m) {
        case 1: return 0.0;
        case 2: return 2.0 * a2 * (1.0 - std::exp(-2.0 * al));
        case 4: return a4 / 8.0 * (std::exp(-4.0 * al) - 4.0 * std::exp(-2.0 * al) + 6.0);
      }
      return std::nullopt;
    }
    case AngleKind::Uniform:
    case AngleKind::Triangular:
      // The reference F(n) is the conjugate of CF(n); F(2) + F(-2) = 2 Re CF(2) either way.
      if (m == 2) return a2 / 4.0 * (2.0 - 2.0 * d.cf(2).real());
      return std::nullopt;
  }
  return std::nullopt;
}

std::vector<ReportRow> corollary_report(const SinusoidalTransform& t, std::uint64_t seed,
                                        std::uint64_t count, const std::string& id_prefix,
                                        const std::string& group) {
  const auto mc = estimate_moments(t, 4, seed, count);
  std::vector<ReportRow> rows;
  for (int m = 1; m <= 4; ++m) {
    ReportRow r;
    r.id = id_prefix + "/m" + std::to_string(m);
    r.group = group;
    r.printed = printed_moment(t, m);
    r.analytic = moment_bessel(t, m);
    r.mc = mc[m - 1].value;
    r.std_error = mc[m - 1].std_error;
    r.verdict = adjudicate(r.printed, r.analytic, r.mc, r.std_error,
                           1e-12 * std::pow(t.amplitude(), m));
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace rgauge
