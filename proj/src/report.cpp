#include "rgauge/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rgauge/corollaries.hpp"
#include "rgauge/gauge.hpp"
#include "rgauge/oracle.hpp"
#include "rgauge/rng.hpp"
#include "rgauge/stats.hpp"

namespace rgauge {
namespace {

constexpr double pi = std::numbers::pi;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Target {
  std::string group;
  std::string label;
  std::function<std::vector<ReportRow>(const Target&, std::uint64_t seed, std::uint64_t count)> run;
};

ReportRow make_row(const Target& target, const std::string& quantity,
                   std::optional<double> printed, double analytic, double mc, double se) {
  ReportRow r;
  r.id = target.label + "/" + quantity;
  r.group = target.group;
  r.printed = printed;
  r.analytic = analytic;
  r.mc = mc;
  r.std_error = se;
  r.verdict = adjudicate(printed, analytic, mc, se, 1e-12);
  return r;
}

Target corollary_target(std::string group, std::string label, SinusoidalTransform t,
                        std::vector<int> keep = {1, 2, 3, 4}) {
  return {std::move(group), std::move(label),
          [t, keep](const Target& self, std::uint64_t seed, std::uint64_t count) {
            auto rows = corollary_report(t, seed, count, self.label, self.group);
            std::vector<ReportRow> out;
            for (auto& r : rows) {
              const int m = r.id.back() - '0';
              if (std::find(keep.begin(), keep.end(), m) != keep.end()) out.push_back(std::move(r));
            }
            return out;
          }};
}

Target phasor_target(std::string label, PhasorSum sum, bool with_mean) {
  return {"phasor", std::move(label),
          [sum, with_mean](const Target& self, std::uint64_t seed, std::uint64_t count) {
            const auto mc = estimate_phasor(sum, seed, count);
            const auto mean = sum_mean(sum);
            const auto paper = sum_variance_paper(sum);
            const auto exact = sum_variance_exact(sum);
            std::vector<ReportRow> rows;
            if (with_mean) {
              rows.push_back(make_row(self, "mean-re", mean.real(), mean.real(),
                                      mc.mean.value.real(), mc.mean.std_error));
              rows.push_back(make_row(self, "mean-im", mean.imag(), mean.imag(),
                                      mc.mean.value.imag(), mc.mean.std_error));
            }
            rows.push_back(make_row(self, "var-re", paper.real(), exact.real(),
                                    mc.variance.real(), mc.std_error_re));
            rows.push_back(make_row(self, "var-im", paper.imag(), exact.imag(),
                                    mc.variance.imag(), mc.std_error_im));
            return rows;
          }};
}

Target gauge_target(std::string label, FluxPhenomenon p) {
  return {"gauge", std::move(label),
          [p](const Target& self, std::uint64_t seed, std::uint64_t count) {
            const auto stats = random_shift_stats(p, seed, count);
            const auto vis = fringe_visibility(p.noise, CounterRng(seed).split(1).key(), count);
            std::vector<ReportRow> rows;
            rows.push_back(make_row(self, "var-re", stats.analytic_variance.paper_form.real(),
                                    stats.analytic_variance.exact_form.real(),
                                    stats.mc_variance.real(), stats.mc_variance_se_re));
            rows.push_back(make_row(self, "var-im", stats.analytic_variance.paper_form.imag(),
                                    stats.analytic_variance.exact_form.imag(),
                                    stats.mc_variance.imag(), stats.mc_variance_se_im));
            rows.push_back(make_row(self, "visibility", std::nullopt, vis.analytic, vis.empirical,
                                    vis.std_error));
            return rows;
          }};
}

// Printed CF of the shifted Gaussian carries an extra sqrt(2 / (pi^2 sigma^2)).
Target shifted_cf_target(std::string label, double sigma, double theta0) {
  return {"normalization", std::move(label),
          [sigma, theta0](const Target& self, std::uint64_t seed, std::uint64_t count) {
            const auto d = AngleDistribution::gaussian(sigma, theta0);
            const double analytic = d.cf(1).real();
            const double printed = std::sqrt(2.0 / (pi * pi * sigma * sigma)) * analytic;
            const CounterRng rng(seed);
            const auto m = chunked_moments<1>(count, [&](std::uint64_t i, std::array<double, 1>& out) {
              out[0] = std::cos(d.draw(rng, i));
            });
            return std::vector<ReportRow>{
                make_row(self, "re-cf1", printed, analytic, m[0].mean, m[0].std_error())};
          }};
}

// Printed densities use 2/pi in place of 1/(pi A). Compared through P(|y| < A/2).
Target density_prefactor_target(std::string label, SinusoidalTransform t) {
  return {"normalization", std::move(label),
          [t](const Target& self, std::uint64_t seed, std::uint64_t count) {
            const double a = t.amplitude();
            const int nodes = 2000;
            const double half = std::asin(0.5);
            double analytic = 0.0;
            for (int k = 0; k < nodes; ++k) {
              const double phi = -half + 2.0 * half * (k + 0.5) / nodes;
              analytic += pdf(t, a * std::sin(phi)) * a * std::cos(phi);
            }
            analytic *= 2.0 * half / nodes;
            const double printed = 2.0 * a * analytic;
            const CounterRng rng(seed);
            const auto m = chunked_moments<1>(count, [&](std::uint64_t i, std::array<double, 1>& out) {
              out[0] = std::abs(t.apply(t.dist().draw(rng, i))) < 0.5 * a ? 1.0 : 0.0;
            });
            return std::vector<ReportRow>{
                make_row(self, "prob-half-width", printed, analytic, m[0].mean, m[0].std_error())};
          }};
}

std::vector<Target> all_targets() {
  using AD = AngleDistribution;
  const auto sin = TrigKind::Sin;
  const auto cos = TrigKind::Cos;
  std::vector<Target> t;
  t.push_back(corollary_target("gaussian", "gaussian/sin/sigma=0.5",
                               {1.0, sin, AD::gaussian_zero_mean(0.5)}));
  t.push_back(corollary_target("gaussian", "gaussian/sin/sigma=1",
                               {1.0, sin, AD::gaussian_zero_mean(1.0)}));
  t.push_back(corollary_target("gaussian-cos", "gaussian-cos/cos/sigma=0.1",
                               {1.0, cos, AD::gaussian_zero_mean(0.1)}));
  t.push_back(corollary_target("gaussian-cos", "gaussian-cos/cos/sigma=1",
                               {1.0, cos, AD::gaussian_zero_mean(1.0)}));
  t.push_back(corollary_target("gaussian-shifted", "gaussian-shifted/sin/sigma=0.5;theta0=0.5",
                               {1.0, sin, AD::gaussian(0.5, 0.5)}, {1, 2, 4}));
  t.push_back(corollary_target("gaussian-shifted", "gaussian-shifted/cos/sigma=0.5;theta0=0.5",
                               {1.0, cos, AD::gaussian(0.5, 0.5)}, {1, 2, 4}));
  t.push_back(corollary_target("laplace", "laplace/sin/alpha=2", {1.0, sin, AD::laplace(2.0)},
                               {1, 2, 4}));
  t.push_back(corollary_target("cauchy", "cauchy/sin/alpha=1", {1.0, sin, AD::cauchy(1.0)},
                               {1, 2, 4}));
  t.push_back(corollary_target("second-moment", "second-moment/sin/uniform",
                               {1.0, sin, AD::uniform()}, {2}));
  t.push_back(corollary_target("second-moment", "second-moment/cos/uniform",
                               {1.0, cos, AD::uniform()}, {2}));
  t.push_back(corollary_target("second-moment", "second-moment/sin/triangular-a=1",
                               {1.0, sin, AD::triangular(1.0)}, {2}));
  t.push_back(corollary_target("second-moment", "second-moment/cos/triangular-a=1",
                               {1.0, cos, AD::triangular(1.0)}, {2}));

  const PhasorSum det({{AmplitudeLaw::deterministic(1.0), AD::uniform()},
                       {AmplitudeLaw::deterministic(1.0), AD::uniform()}});
  const PhasorSum zero_mean({{AmplitudeLaw::gaussian(0.0, 1.0), AD::uniform()}});
  t.push_back(phasor_target("phasor/det-amp-uniform-n=2", det, true));
  t.push_back(phasor_target("phasor/gauss-amp-uniform-n=1", zero_mean, false));

  t.push_back(gauge_target("gauge/gaussian-sigma=1", FluxPhenomenon(1.0, 1.0, AD::gaussian_zero_mean(1.0))));
  t.push_back(gauge_target("gauge/cauchy-alpha=1", FluxPhenomenon(1.0, 1.0, AD::cauchy(1.0))));

  t.push_back(shifted_cf_target("normalization/gaussian-cf/sigma=0.5;theta0=0.5", 0.5, 0.5));
  t.push_back(density_prefactor_target("normalization/density/sin/uniform-A=2",
                                       {2.0, sin, AD::uniform()}));
  return t;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Agree: return "AGREE";
    case Verdict::Disagree: return "DISAGREE";
    case Verdict::Untested: return "UNTESTED";
  }
  return "UNTESTED";
}

Verdict parse_verdict(const std::string& s) {
  if (s == "AGREE") return Verdict::Agree;
  if (s == "DISAGREE") return Verdict::Disagree;
  if (s == "UNTESTED") return Verdict::Untested;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

Verdict adjudicate(std::optional<double> printed, double analytic, double mc, double std_error,
                   double floor) {
  if (!printed) return Verdict::Untested;
  const double tol = 3.0 * std_error + floor;
  if (std::abs(*printed - mc) <= tol) return Verdict::Agree;
  if (std::abs(analytic - mc) <= tol) return Verdict::Disagree;
  return Verdict::Untested;
}

std::string DiscrepancyReport::to_csv() const {
  std::string out = "id,group,printed,analytic,mc,std_error,verdict\n";
  for (const auto& r : rows) {
    out += r.id + "," + r.group + "," + (r.printed ? fmt17(*r.printed) : std::string()) + "," +
           fmt17(r.analytic) + "," + fmt17(r.mc) + "," + fmt17(r.std_error) + "," +
           to_string(r.verdict) + "\n";
  }
  return out;
}

std::string DiscrepancyReport::to_text() const {
  std::size_t width = 2;
  for (const auto& r : rows) width = std::max(width, r.id.size());
  std::ostringstream out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-*s  %14s  %14s  %14s  %10s  %s\n", static_cast<int>(width),
                "id", "printed", "analytic", "mc", "std_error", "verdict");
  out << buf;
  for (const auto& r : rows) {
    char printed[32] = "-";
    if (r.printed) std::snprintf(printed, sizeof printed, "%.8g", *r.printed);
    std::snprintf(buf, sizeof buf, "%-*s  %14s  %14.8g  %14.8g  %10.3g  %s\n",
                  static_cast<int>(width), r.id.c_str(), printed, r.analytic, r.mc, r.std_error,
                  to_string(r.verdict).c_str());
    out << buf;
  }
  return out.str();
}

const std::vector<std::string>& report_groups() {
  static const std::vector<std::string> groups = {
      "gaussian", "gaussian-cos", "gaussian-shifted", "laplace", "cauchy",
      "second-moment", "phasor", "gauge", "normalization"};
  return groups;
}

DiscrepancyReport build_report(const std::vector<std::string>& groups, std::uint64_t master_seed,
                               std::uint64_t count) {
  for (const auto& g : groups)
    if (std::find(report_groups().begin(), report_groups().end(), g) == report_groups().end())
      throw std::invalid_argument("unknown report group '" + g + "'");
  DiscrepancyReport report;
  for (const auto& target : all_targets()) {
    if (std::find(groups.begin(), groups.end(), target.group) == groups.end()) continue;
    const std::uint64_t seed = mix64(master_seed ^ hash_label(target.label));
    for (auto& row : target.run(target, seed, count)) report.rows.push_back(std::move(row));
  }
  return report;
}

std::string group_of(const std::string& id) { return id.substr(0, id.find('/')); }

GoldenVerdicts parse_golden(const std::string& csv_text) {
  GoldenVerdicts golden;
  std::istringstream in(csv_text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#' || line == "id,verdict") continue;
    const auto comma = line.rfind(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("golden list line " + std::to_string(line_no) +
                                  ": expected id,verdict");
    golden[line.substr(0, comma)] = parse_verdict(line.substr(comma + 1));
  }
  return golden;
}

std::vector<std::string> compare_with_golden(const DiscrepancyReport& report,
                                             const GoldenVerdicts& golden,
                                             const std::vector<std::string>& groups) {
  std::vector<std::string> problems;
  std::set<std::string> seen;
  for (const auto& r : report.rows) {
    seen.insert(r.id);
    const auto it = golden.find(r.id);
    if (it == golden.end()) {
      problems.push_back(r.id + ": not in golden list (got " + to_string(r.verdict) + ")");
    } else if (it->second != r.verdict) {
      problems.push_back(r.id + ": expected " + to_string(it->second) + ", got " +
                         to_string(r.verdict));
    }
  }
  for (const auto& [id, verdict] : golden) {
    const auto g = group_of(id);
    if (std::find(groups.begin(), groups.end(), g) == groups.end()) continue;
    if (!seen.count(id)) problems.push_back(id + ": expected " + to_string(verdict) + ", missing");
  }
  return problems;
}

}  // namespace rgauge
