// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "rgauge/cli.hpp"
#include "rgauge/gauge.hpp"
#include "rgauge/huygens.hpp"
#include "rgauge/oracle.hpp"
#include "rgauge/phasors.hpp"
#include "rgauge/report.hpp"
#include "rgauge/sintrans.hpp"
#include "rgauge/specfun.hpp"
#include "support/oracles.hpp"

namespace fs = std::filesystem;
using namespace rgauge;

namespace tol {
constexpr double kTable = 1e-10;          // closed-form moments
constexpr double kSigmas = 3.0;           // MC agreement
constexpr double kRoutes = 1e-9;          // Bessel vs Chebyshev, times A^m
constexpr double kNormalisation = 1e-6;
constexpr double kArcsine = 1e-8;
constexpr double kArcsineEdge = 0.99;
constexpr double kCfFloor = 5e-3;
constexpr double kJ0 = 1e-10;
constexpr double kDerivRel = 1e-6;
constexpr double kDerivFloor = 1e-3;      // relative error taken against max(|ref|, floor)
constexpr double kFdStep = 0.1;
constexpr double kOrthogonality = 1e-9;
constexpr double kPaperForm = 1e-15;
constexpr double kPhasor = 1e-12;
constexpr double kHuygens = 1e-12;
constexpr double kVarianceDecade = 0.02;  // per factor 10 in noise std
constexpr double kMetricUlps = 8.0;
constexpr double kRuntime1 = 10.0;
constexpr double kRuntime2 = 60.0;
constexpr double kRuntime7 = 120.0;
}  // namespace tol

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<AngleDistribution> catalog() {
  return {AngleDistribution::uniform(),          AngleDistribution::gaussian_zero_mean(0.7),
          AngleDistribution::gaussian(0.6, 0.4), AngleDistribution::laplace(1.5),
          AngleDistribution::cauchy(0.5),        AngleDistribution::triangular(2.0)};
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (double s : {0.1, 0.5, 1.0, 2.0}) {
    const SinusoidalTransform t(1.0, TrigKind::Sin, AngleDistribution::gaussian_zero_mean(s));
    const double e = std::exp(-2.0 * s * s);
    const double m2 = (1.0 - e) / 2.0;
    const double m4 = (3.0 - 4.0 * e + std::exp(-8.0 * s * s)) / 8.0;
    o.require(std::abs(moment_bessel(t, 2) - m2) <= tol::kTable, "m2 sigma=" + num(s));
    o.require(std::abs(moment_bessel(t, 4) - m4) <= tol::kTable, "m4 sigma=" + num(s));
    const auto mc = estimate_moments(t, 4, 1000 + static_cast<std::uint64_t>(s * 10), 1'000'000);
    o.require(std::abs(mc[1].value - m2) <= tol::kSigmas * mc[1].std_error, "MC m2 sigma=" + num(s));
    o.require(std::abs(mc[3].value - m4) <= tol::kSigmas * mc[3].std_error, "MC m4 sigma=" + num(s));
  }
  const double dt = seconds_since(t0);
  o.require(dt < tol::kRuntime1, "runtime " + num(dt) + " s");
  if (o.pass) o.detail = num(dt) + " s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::uint64_t seed = 2000;
  double worst_route = 0.0;
  double worst_z = 0.0;
  for (const auto& d : catalog()) {
    for (auto kind : {TrigKind::Sin, TrigKind::Cos}) {
      const SinusoidalTransform t(1.5, kind, d);
      const auto mc = estimate_moments(t, 4, ++seed, 1'000'000);
      for (int m = 1; m <= 4; ++m) {
        const double b = moment_bessel(t, m);
        const double c = moment_chebyshev(t, m);
        const double scale = std::pow(1.5, m);
        const std::string where = d.spec() + " " + to_string(kind) + " m=" + std::to_string(m);
        worst_route = std::max(worst_route, std::abs(b - c) / scale);
        o.require(std::abs(b - c) <= tol::kRoutes * scale, "routes " + where);
        const double se = std::max(mc[m - 1].std_error, 1e-300);
        worst_z = std::max({worst_z, std::abs(b - mc[m - 1].value) / se, std::abs(c - mc[m - 1].value) / se});
        o.require(std::abs(b - mc[m - 1].value) <= tol::kSigmas * mc[m - 1].std_error, "MC " + where);
        o.require(std::abs(c - mc[m - 1].value) <= tol::kSigmas * mc[m - 1].std_error, "MC " + where);
      }
    }
  }
  const double dt = seconds_since(t0);
  o.require(dt < tol::kRuntime2, "runtime " + num(dt) + " s");
  if (o.pass) o.detail = "max route gap " + num(worst_route) + ", max |z| " + num(worst_z) + ", " + num(dt) + " s";
  return o;
}

Outcome criterion3() {
  Outcome o;
  double worst = 0.0;
  for (const auto& d : catalog()) {
    for (auto kind : {TrigKind::Sin, TrigKind::Cos}) {
      const SinusoidalTransform t(1.2, kind, d);
      const int n = 4000;
      double s = 0.0;
      for (int k = 0; k < n; ++k) {
        const double phi = oracle::pi * (k + 0.5) / n;
        s += pdf(t, 1.2 * std::cos(phi)) * 1.2 * std::sin(phi);
      }
      s *= oracle::pi / n;
      worst = std::max(worst, std::abs(s - 1.0));
      o.require(std::abs(s - 1.0) <= tol::kNormalisation, "normalisation " + d.spec());
    }
  }
  const SinusoidalTransform u(1.2, TrigKind::Sin, AngleDistribution::uniform());
  double sup = 0.0;
  for (int k = 0; k <= 2000; ++k) {
    const double y = 1.2 * tol::kArcsineEdge * (-1.0 + k / 1000.0);
    const double exact = 1.0 / (oracle::pi * 1.2 * std::sqrt(1.0 - (y / 1.2) * (y / 1.2)));
    sup = std::max(sup, std::abs(pdf(u, y) - exact));
  }
  o.require(sup <= tol::kArcsine, "arcsine sup error " + num(sup));
  if (o.pass) o.detail = "max |int - 1| " + num(worst) + ", arcsine sup " + num(sup);
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::uint64_t seed = 4000;
  for (const auto& d : catalog()) {
    for (auto kind : {TrigKind::Sin, TrigKind::Cos}) {
      const SinusoidalTransform t(1.0, kind, d);
      for (double w : {0.5, 1.0, 2.0, 5.0, 10.0}) {
        const auto m = cf_series(t, w);
        const auto mc = estimate_cf(t, w, ++seed, 1'000'000);
        const double allowed = std::max(tol::kCfFloor, tol::kSigmas * mc.std_error);
        o.require(std::abs(m - mc.value) <= allowed, "cf " + d.spec() + " w=" + num(w));
      }
    }
  }
  double worst = 0.0;
  const SinusoidalTransform u(1.7, TrigKind::Sin, AngleDistribution::uniform());
  for (double w : {0.5, 1.0, 2.0, 5.0, 10.0}) {
    const auto m = cf_series(u, w);
    worst = std::max(worst, std::abs(m - std::complex<double>(oracle::bessel_quadrature(0, 1.7 * w), 0.0)));
  }
  o.require(worst <= tol::kJ0, "J0 gap " + num(worst));
  if (o.pass) o.detail = "J0 gap " + num(worst);
  return o;
}

Outcome criterion5() {
  Outcome o;
  double worst = 0.0;
  for (int n = 0; n <= 4; ++n)
    for (int p = -5; p <= 5; ++p)
      for (double x : {0.1, 1.0, 5.0, 10.0}) {
        const double ref = n == 0 ? oracle::bessel_quadrature(p, x)
                                  : oracle::derivative_fd([p](double t) { return oracle::bessel_quadrature(p, t); },
                                                          n, x, tol::kFdStep);
        const double rel = std::abs(specfun::bessel_j_derivative(p, n, x) - ref) / std::max(std::abs(ref), tol::kDerivFloor);
        worst = std::max(worst, rel);
        o.require(rel <= tol::kDerivRel, "derivative p=" + std::to_string(p) + " N=" + std::to_string(n));
      }
  double orth = 0.0;
  for (int m = 0; m <= 16; ++m)
    for (int n = 0; n <= 16; ++n) {
      const double v = specfun::gauss_chebyshev(
          [=](double y) { return specfun::chebyshev_t(m, y) * specfun::chebyshev_t(n, y); }, 4096);
      const double expect = m != n ? 0.0 : (m == 0 ? oracle::pi : oracle::pi / 2.0);
      orth = std::max(orth, std::abs(v - expect));
    }
  o.require(orth <= tol::kOrthogonality, "orthogonality " + num(orth));
  if (o.pass) o.detail = "max rel FD gap " + num(worst) + ", orthogonality " + num(orth);
  return o;
}

Outcome criterion6() {
  Outcome o;
  const double sigma = 1.0;
  const double alpha = 1.0;
  const auto g = fringe_visibility(AngleDistribution::gaussian_zero_mean(sigma), 6001, 1'000'000);
  o.require(std::abs(g.empirical - std::exp(-sigma * sigma / 2)) <= tol::kSigmas * g.std_error, "Gaussian visibility");
  const auto c = fringe_visibility(AngleDistribution::cauchy(alpha), 6002, 1'000'000);
  o.require(std::abs(c.empirical - std::exp(-alpha)) <= tol::kSigmas * c.std_error, "Cauchy visibility");
  for (const auto& d : {AngleDistribution::uniform(), AngleDistribution::gaussian_zero_mean(0.5),
                        AngleDistribution::laplace(1.0), AngleDistribution::cauchy(1.0),
                        AngleDistribution::triangular(1.0)}) {
    const auto m = random_shift_mean(FluxPhenomenon(1.0, 1.0, d));
    o.require(m.imag() == 0.0, "mean not zero for " + d.spec());
  }
  const auto skew = random_shift_mean(FluxPhenomenon(1.0, 1.0, AngleDistribution::gaussian(0.5, oracle::pi / 4)));
  o.require(skew.imag() != 0.0, "mean zero for theta0 = pi/4");
  const auto vg = random_shift_variance(FluxPhenomenon(1.0, 1.0, AngleDistribution::gaussian_zero_mean(sigma)));
  const double bg = 1.0 - std::exp(-2.0 * sigma * sigma);
  o.require(std::abs(vg.paper_form - std::complex<double>(bg, bg)) <= tol::kPaperForm, "Gaussian bracket");
  const auto vc = random_shift_variance(FluxPhenomenon(1.0, 1.0, AngleDistribution::cauchy(alpha)));
  const double bc = 1.0 - std::exp(-2.0 * alpha);
  o.require(std::abs(vc.paper_form - std::complex<double>(bc, bc)) <= tol::kPaperForm, "Cauchy bracket");
  if (o.pass)
    o.detail = "visibility z " + num((g.empirical - g.analytic) / g.std_error) + ", " +
               num((c.empirical - c.analytic) / c.std_error);
  return o;
}

std::string run_validate(unsigned threads, const fs::path& csv, double& elapsed) {
  const std::string t = std::to_string(threads);
  const std::string out = csv.string();
  const char* argv[] = {"rgauge", "--threads", t.c_str(), "validate", "--csv", out.c_str()};
  std::ostringstream so;
  std::ostringstream se;
  const auto t0 = std::chrono::steady_clock::now();
  const int code = cli::run_cli(6, argv, so, se);
  elapsed = seconds_since(t0);
  if (code != 0) return "exit " + std::to_string(code) + ": " + se.str();
  std::ifstream f(csv, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

struct Row {
  double printed;
  double mc;
  double se;
  std::string verdict;
};

std::map<std::string, Row> parse_report(const std::string& csv) {
  std::map<std::string, Row> rows;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<std::string> f;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    if (f.size() != 7) continue;
    rows[f[0]] = {f[2] == "" ? NAN : std::stod(f[2]), std::stod(f[4]), std::stod(f[5]), f[6]};
  }
  return rows;
}

Outcome criterion7(const std::string& csv, double elapsed) {
  Outcome o;
  const auto rows = parse_report(csv);
  o.require(!rows.empty(), "empty report: " + csv.substr(0, 200));
  auto disagree = [&](const std::string& id) {
    const auto it = rows.find(id);
    if (it == rows.end()) return o.require(false, "missing row " + id);
    const Row& r = it->second;
    o.require(r.verdict == "DISAGREE", id + " is " + r.verdict);
    o.require(std::abs(r.printed - r.mc) > tol::kSigmas * r.se, id + " within 3 sigma");
  };
  for (const char* id : {"cauchy/sin/alpha=1/m2", "laplace/sin/alpha=2/m2",               // (a)
                         "laplace/sin/alpha=2/m4", "cauchy/sin/alpha=1/m4",                 // (b)
                         "gaussian-shifted/sin/sigma=0.5;theta0=0.5/m4",
                         "gaussian-shifted/sin/sigma=0.5;theta0=0.5/m1",                    // (c)
                         "gaussian-cos/cos/sigma=0.1/m2"})                                  // (d)
    disagree(id);
  int gaussian = 0;
  for (const auto& [id, r] : rows) {
    if (id.rfind("gaussian/", 0) != 0) continue;
    ++gaussian;
    o.require(r.verdict == "AGREE", id + " is " + r.verdict);
  }
  o.require(gaussian == 8, "Gaussian block has " + std::to_string(gaussian) + " rows");
  o.require(elapsed < tol::kRuntime7, "runtime " + num(elapsed) + " s");
  if (o.pass) o.detail = std::to_string(rows.size()) + " rows, " + num(elapsed) + " s";
  return o;
}

Outcome criterion8() {
  Outcome o;
  const PhasorSum zero({{AmplitudeLaw::gaussian(0.0, 1.0), AngleDistribution::uniform()},
                        {AmplitudeLaw::gaussian(0.0, 2.5), AngleDistribution::uniform()},
                        {AmplitudeLaw::uniform(-1.0, 1.0), AngleDistribution::uniform()}});
  const double gap = std::abs(sum_variance_paper(zero) - sum_variance_exact(zero));
  o.require(gap <= tol::kPhasor, "zero-mean readings differ by " + num(gap));
  const PhasorSum det({{AmplitudeLaw::deterministic(1.0), AngleDistribution::uniform()},
                       {AmplitudeLaw::deterministic(0.5), AngleDistribution::gaussian_zero_mean(0.8)}});
  const auto paper = sum_variance_paper(det);
  const auto exact = sum_variance_exact(det);
  const auto mc = estimate_phasor(det, 8001, 1'000'000);
  o.require(std::abs(paper - exact) > 0.1, "deterministic readings coincide");
  o.require(std::abs(mc.variance.real() - exact.real()) <= tol::kSigmas * mc.std_error_re, "MC re vs exact");
  o.require(std::abs(mc.variance.imag() - exact.imag()) <= tol::kSigmas * mc.std_error_im, "MC im vs exact");
  o.require(std::abs(mc.variance.real() - paper.real()) > tol::kSigmas * mc.std_error_re, "MC re backs paper");
  if (o.pass) o.detail = "zero-mean gap " + num(gap) + ", divergence " + num(std::abs(paper - exact));
  return o;
}

Outcome criterion9() {
  Outcome o;
  const Wavefront ones(Wavefront::uniform_grid(256), std::vector<std::complex<double>>(256, 1.0));
  const auto out = propagate(ones, GainPattern::constant(0.5), 1.0);
  double gap = 0.0;
  for (const auto& a : out.amplitudes()) gap = std::max(gap, std::abs(a - oracle::pi));
  o.require(gap <= tol::kHuygens, "constant output gap " + num(gap));

  const auto grid = Wavefront::uniform_grid(64);
  const GainPattern g(2, 2, std::vector<double>{0.4, -0.3, 1.2, 0.05}, 0.1);
  std::vector<std::complex<double>> u(64), v(64), mix(64);
  const std::complex<double> a(0.7, 0.2);
  const std::complex<double> b(-1.3, 0.9);
  for (int k = 0; k < 64; ++k) {
    u[k] = std::exp(std::complex<double>(0.0, 2.0 * grid[k]));
    v[k] = std::cos(grid[k]) + 0.3;
    mix[k] = a * u[k] + b * v[k];
  }
  const auto pu = propagate(Wavefront(grid, u), g, 1.0);
  const auto pv = propagate(Wavefront(grid, v), g, 1.0);
  const auto pm = propagate(Wavefront(grid, mix), g, 1.0);
  double lin = 0.0;
  for (int k = 0; k < 64; ++k)
    lin = std::max(lin, std::abs(pm.amplitudes()[k] - a * pu.amplitudes()[k] - b * pv.amplitudes()[k]));
  o.require(lin <= tol::kHuygens, "linearity gap " + num(lin));

  // The random coefficient multiplies sin(theta), so the source needs that mode.
  std::vector<std::complex<double>> w(64);
  for (int k = 0; k < 64; ++k) w[k] = std::sin(grid[k]) + 0.3;
  std::vector<double> vmax;
  for (double s : {1e-1, 1e-2, 1e-3, 0.0}) {
    const GainPattern r(1, 1, std::vector<AmplitudeLaw>{AmplitudeLaw::gaussian(1.0, s)}, 0.2);
    const auto e = ensemble_propagate(Wavefront(grid, w), r, 1.0, 9001, 1000);
    vmax.push_back(*std::max_element(e.variance.begin(), e.variance.end()));
  }
  o.require(vmax[0] > 0.0, "no variance at the largest noise");
  // Variance scales as the coefficient variance: a factor 100 per decade.
  for (int i = 1; i < 3; ++i)
    o.require(vmax[i] < tol::kVarianceDecade * vmax[i - 1], "variance not shrinking at step " + std::to_string(i));
  o.require(vmax[3] == 0.0, "variance at zero noise " + num(vmax[3]));
  if (o.pass) o.detail = "constant gap " + num(gap) + ", variances " + num(vmax[0]) + " " + num(vmax[1]) + " " + num(vmax[2]);
  return o;
}

Outcome criterion10() {
  Outcome o;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  double worst = 0.0;
  for (double r : {0.5, 1.0, 2.0, 10.0, 1e3}) {
    const double dev = metric_invariance(r, 10'001, 100'000);
    worst = std::max(worst, dev / (eps * r * r));
    o.require(dev <= tol::kMetricUlps * eps * r * r, "r=" + num(r) + " deviation " + num(dev));
  }
  if (o.pass) o.detail = "max deviation " + num(worst) + " eps r^2";
  return o;
}

Outcome criterion11(const std::vector<std::string>& reports) {
  Outcome o;
  for (std::size_t i = 1; i < reports.size(); ++i)
    o.require(reports[i] == reports[0], "run " + std::to_string(i) + " differs from run 0");
  if (o.pass) o.detail = std::to_string(reports.size()) + " runs, " + std::to_string(reports[0].size()) + " bytes";
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const std::string& name, const Outcome& o) {
    std::printf("[%2d] %s  %-34s %s\n", id, o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  };

  report(1, "zero-mean Gaussian moment table", criterion1());
  report(2, "three-route moment agreement", criterion2());
  report(3, "density normalisation, arcsine", criterion3());
  report(4, "characteristic function fidelity", criterion4());
  report(5, "Bessel derivative, orthogonality", criterion5());
  report(6, "fringe visibility and shift", criterion6());

  const auto dir = fs::temp_directory_path() / "rgauge_acceptance";
  fs::create_directories(dir);
  std::vector<std::string> reports;
  double first_elapsed = 0.0;
  const unsigned many = std::max(4u, std::thread::hardware_concurrency());
  int run = 0;
  for (unsigned threads : {1u, many, 1u}) {
    double elapsed = 0.0;
    reports.push_back(run_validate(threads, dir / ("report" + std::to_string(run++) + ".csv"), elapsed));
    if (run == 1) first_elapsed = elapsed;
  }
  report(7, "discrepancy adjudication", criterion7(reports[0], first_elapsed));
  report(8, "phasor variance readings", criterion8());
  report(9, "Huygens propagator", criterion9());
  report(10, "metric invariance", criterion10());
  report(11, "report reproducibility 1 vs N", criterion11(reports));

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
