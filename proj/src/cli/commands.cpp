#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <variant>

#include "rgauge/cli.hpp"
#include "rgauge/error.hpp"
#include "rgauge/gauge.hpp"
#include "rgauge/huygens.hpp"
#include "rgauge/oracle.hpp"
#include "rgauge/report.hpp"
#include "rgauge/sintrans.hpp"
#include "rgauge/spec_parse.hpp"
#include "rgauge/specfun.hpp"

#ifndef RGAUGE_DEFAULT_GOLDEN
#define RGAUGE_DEFAULT_GOLDEN "data/golden_verdicts.csv"
#endif

namespace rgauge::cli {
namespace {

using json = nlohmann::json;
using cplx = std::complex<double>;

enum class FieldType { Real, Count, Seed, Text, Range, List, Gain };

struct Field {
  std::string key;
  FieldType type;
  json fallback;  // null => required
  std::string help;
};

using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Outcome {
  Table table;
  std::optional<json> summary;
  std::vector<std::string> warnings;
  std::string text;  // validate only
  int status = 0;
};

struct Command {
  std::string name;
  std::string help;
  std::vector<Field> fields;
  std::function<Outcome(const json&, std::ostream&)> run;
};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string flag_name(const std::string& key) {
  std::string s = key;
  for (auto& c : s)
    if (c == '_') c = '-';
  return "--" + s;
}

// ---- config normalisation ------------------------------------------------

std::uint64_t seed_value(const json& v, const std::string& field) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer()) {
    if (v.get<std::int64_t>() < 0) throw ConfigError(field, "seed must be non-negative");
    return static_cast<std::uint64_t>(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) {
      try {
        return std::stoull(s);
      } catch (const std::exception&) {
        throw ConfigError(field, "seed '" + s + "' out of range");
      }
    }
    return parse_count(s, field);
  }
  if (v.is_number_float()) return parse_count(fmt17(v.get<double>()), field);
  throw ConfigError(field, "expected an integer seed");
}

json gain_object(const json& v);

json normalise(const Field& f, const json& v) {
  const std::string& k = f.key;
  switch (f.type) {
    case FieldType::Real:
      if (v.is_number()) return v.get<double>();
      if (v.is_string()) return parse_real(v.get<std::string>(), k);
      throw ConfigError(k, "expected a number");
    case FieldType::Count:
      if (v.is_number_unsigned()) return v.get<std::uint64_t>();
      if (v.is_number()) return parse_count(fmt17(v.get<double>()), k);
      if (v.is_string()) return parse_count(v.get<std::string>(), k);
      throw ConfigError(k, "expected a count");
    case FieldType::Seed:
      return seed_value(v, k);
    case FieldType::Text:
      if (v.is_string()) return v;
      throw ConfigError(k, "expected a string");
    case FieldType::Range:
      if (v.is_number()) return fmt17(v.get<double>());
      if (v.is_string()) {
        if (!v.get<std::string>().empty()) parse_range(v.get<std::string>(), k);
        return v;
      }
      throw ConfigError(k, "expected lo:hi:step");
    case FieldType::List: {
      json out = json::array();
      if (v.is_string()) {
        out.push_back(v);
        return out;
      }
      if (!v.is_array()) throw ConfigError(k, "expected a list of strings");
      for (const auto& e : v) {
        if (!e.is_string()) throw ConfigError(k, "expected a list of strings");
        out.push_back(e);
      }
      return out;
    }
    case FieldType::Gain:
      return gain_object(v);
  }
  throw ConfigError(k, "unsupported field type");
}

json read_json_file(const std::string& path, const std::string& field) {
  std::ifstream in(path);
  if (!in) throw ConfigError(field, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(field, std::string("invalid JSON: ") + e.what());
  }
}

// Canonical gain record: {"offset", "m", "n", "coefficients"} or with "laws".
json gain_object(const json& v) {
  const std::string field = "gain";
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    const auto colon = s.find(':');
    const std::string head = lower(s.substr(0, colon));
    if (colon == std::string::npos) throw ConfigError(field, "expected const:C or json:PATH");
    const std::string rest = s.substr(colon + 1);
    if (head == "const")
      return gain_object(json{{"offset", parse_real(rest, field)}});
    if (head == "json") return gain_object(read_json_file(rest, field));
    throw ConfigError(field, "unknown gain form '" + head + "'");
  }
  if (!v.is_object()) throw ConfigError(field, "expected a string or an object");
  for (const auto& [key, val] : v.items()) {
    if (key != "offset" && key != "m" && key != "n" && key != "coefficients" && key != "laws")
      throw ConfigError(field + "." + key, "unknown gain key");
  }
  json out;
  out["offset"] = v.contains("offset") ? normalise({"gain.offset", FieldType::Real, 0.0, ""},
                                                   v["offset"])
                                       : json(0.0);
  const bool has_coeff = v.contains("coefficients");
  const bool has_laws = v.contains("laws");
  if (has_coeff && has_laws) throw ConfigError(field, "give either coefficients or laws");
  if (!has_coeff && !has_laws) {
    out["m"] = 1;
    out["n"] = 1;
    out["coefficients"] = json::array({0.0});
    return out;
  }
  if (!v.contains("m") || !v.contains("n")) throw ConfigError(field, "m and n are required");
  out["m"] = normalise({"gain.m", FieldType::Count, 1, ""}, v["m"]);
  out["n"] = normalise({"gain.n", FieldType::Count, 1, ""}, v["n"]);
  if (has_coeff) {
    const auto& c = v["coefficients"];
    if (!c.is_array()) throw ConfigError("gain.coefficients", "expected an array");
    json arr = json::array();
    for (const auto& e : c) arr.push_back(normalise({"gain.coefficients", FieldType::Real, 0.0, ""}, e));
    out["coefficients"] = arr;
  } else {
    out["laws"] = normalise({"gain.laws", FieldType::List, json::array(), ""}, v["laws"]);
    for (const auto& law : out["laws"]) parse_amplitude_spec(law.get<std::string>(), "gain.laws");
  }
  return out;
}

// ---- typed accessors -----------------------------------------------------

double real(const json& cfg, const char* key) { return cfg.at(key).get<double>(); }
std::uint64_t count(const json& cfg, const char* key) { return cfg.at(key).get<std::uint64_t>(); }
std::string text(const json& cfg, const char* key) { return cfg.at(key).get<std::string>(); }

template <class F>
auto field_guard(const std::string& field, F&& make) {
  try {
    return make();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(field, e.what());
  }
}

TrigKind trig_kind(const json& cfg) {
  const std::string k = lower(text(cfg, "kind"));
  if (k == "sin") return TrigKind::Sin;
  if (k == "cos") return TrigKind::Cos;
  throw ConfigError("kind", "expected sin or cos, got '" + text(cfg, "kind") + "'");
}

SinusoidalTransform transform(const json& cfg) {
  const auto dist = parse_angle_spec(text(cfg, "dist"), "dist");
  const auto kind = trig_kind(cfg);
  return field_guard("A", [&] { return SinusoidalTransform(real(cfg, "A"), kind, dist); });
}

SeriesControl series_control(const json& cfg) {
  SeriesControl ctl;
  const auto order = count(cfg, "max_order");
  if (order < 1 || order > static_cast<std::uint64_t>(specfun::kMaxBesselOrder))
    throw ConfigError("max_order", "must lie in [1, " + std::to_string(specfun::kMaxBesselOrder) + "]");
  ctl.max_order = static_cast<int>(order);
  ctl.tail_tolerance = real(cfg, "tol");
  if (!(ctl.tail_tolerance > 0.0)) throw ConfigError("tol", "must be positive");
  return ctl;
}

std::uint64_t mc_count(const json& cfg, std::uint64_t minimum, std::uint64_t maximum = 100'000'000) {
  const auto n = count(cfg, "count");
  if (n < minimum || n > maximum)
    throw ConfigError("count", "must lie in [" + std::to_string(minimum) + ", " +
                                   std::to_string(maximum) + "]");
  return n;
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

// ---- commands ------------------------------------------------------------

Field seed_field() {
  return {"seed", FieldType::Seed, kDefaultMasterSeed, std::string("master seed (default $") + kSeedEnv + ")"};
}

std::vector<Field> transform_fields() {
  return {{"dist", FieldType::Text, nullptr, "angle distribution, e.g. gaussian:sigma=1"},
          {"kind", FieldType::Text, "sin", "sin or cos"},
          {"A", FieldType::Real, 1.0, "amplitude"},
          {"max_order", FieldType::Count, 64, "series order cap"},
          {"tol", FieldType::Real, 1e-12, "series tail tolerance"}};
}

std::vector<Field> output_fields(bool summary) {
  std::vector<Field> f{{"out", FieldType::Text, "", "table path (stdout if empty)"},
                       {"format", FieldType::Text, "csv", "csv or json"}};
  if (summary) f.push_back({"summary", FieldType::Text, "", "summary JSON path (stderr if empty)"});
  return f;
}

template <class... Lists>
std::vector<Field> join(Lists... lists) {
  std::vector<Field> out;
  (out.insert(out.end(), lists.begin(), lists.end()), ...);
  return out;
}

Outcome cmd_cf(const json& cfg, std::ostream&) {
  const auto t = transform(cfg);
  const auto ctl = series_control(cfg);
  const auto omegas = parse_range(text(cfg, "omega"), "omega");
  const auto n = mc_count(cfg, kMinOracleCount);
  const auto seed = count(cfg, "seed");
  Outcome o;
  o.table.columns = {"omega", "re", "im", "mc_re", "mc_im", "std_err"};
  for (double w : omegas) {
    const cplx m = cf_series(t, w, ctl);
    const auto mc = estimate_cf(t, w, seed, n);
    o.table.rows.push_back({w, m.real(), m.imag(), mc.value.real(), mc.value.imag(), mc.std_error});
  }
  return o;
}

std::vector<double> pdf_grid(const json& cfg, double a) {
  const auto y = text(cfg, "y");
  if (!y.empty()) return parse_range(y, "y");
  const auto n = count(cfg, "points");
  if (n < 2 || n > 10'000'000) throw ConfigError("points", "must lie in [2, 1e7]");
  // Chebyshev-Gauss nodes cluster at the edge singularities.
  std::vector<double> out(n);
  for (std::uint64_t k = 0; k < n; ++k)
    out[k] = -a * std::cos(std::numbers::pi * (static_cast<double>(k) + 0.5) / static_cast<double>(n));
  return out;
}

Outcome cmd_pdf(const json& cfg, std::ostream&) {
  const auto t = transform(cfg);
  const auto ctl = series_control(cfg);
  const auto grid = pdf_grid(cfg, t.amplitude());
  Outcome o;
  o.table.columns = {"y", "pdf", "terms", "tail_bound"};
  double worst_tail = 0.0;
  for (double y : grid) {
    const auto v = pdf_series(t, y, ctl);
    if (!v.converged) worst_tail = std::max(worst_tail, v.tail_bound);
    o.table.rows.push_back({y, v.value, static_cast<std::int64_t>(v.terms), v.tail_bound});
  }
  if (worst_tail > 0.0)
    o.warnings.push_back("density series truncated; pointwise tail bound up to " + fmt17(worst_tail));
  return o;
}

Outcome cmd_moments(const json& cfg, std::ostream&) {
  const auto t = transform(cfg);
  const auto ctl = series_control(cfg);
  const auto max_m = count(cfg, "max_m");
  if (max_m < 1 || max_m > static_cast<std::uint64_t>(kMaxMomentOrder))
    throw ConfigError("max_m", "must lie in [1, " + std::to_string(kMaxMomentOrder) + "]");
  const auto n = mc_count(cfg, kMinOracleCount);
  const auto mc = estimate_moments(t, static_cast<int>(max_m), count(cfg, "seed"), n);
  Outcome o;
  o.table.columns = {"m", "bessel", "chebyshev", "mc", "std_err"};
  for (int m = 1; m <= static_cast<int>(max_m); ++m) {
    SeriesControl c = ctl;
    c.max_order = std::max(c.max_order, m);
    o.table.rows.push_back({static_cast<std::int64_t>(m), moment_bessel(t, m),
                            moment_chebyshev(t, m, c), mc[m - 1].value, mc[m - 1].std_error});
  }
  return o;
}

Outcome cmd_ab(const json& cfg, std::ostream&) {
  const auto noise = parse_angle_spec(text(cfg, "noise"), "noise");
  const FluxPhenomenon p = field_guard("coupling", [&] {
    return FluxPhenomenon(real(cfg, "coupling"), real(cfg, "flux"), noise);
  });
  const auto n = mc_count(cfg, kMinVisibilityCount);
  const auto grid = count(cfg, "grid");
  if (grid < static_cast<std::uint64_t>(kMinVisibilityGrid) || grid > 100'000)
    throw ConfigError("grid", "must lie in [64, 100000]");
  const auto seed = count(cfg, "seed");
  const auto vis_seed = CounterRng(seed).split(1).key();

  const auto stats = random_shift_stats(p, seed, n);
  const auto vis = fringe_visibility(noise, vis_seed, n, static_cast<int>(grid));
  const auto intensity = ensemble_intensity(noise, vis_seed, n, static_cast<int>(grid));

  Outcome o;
  o.table.columns = {"phi", "intensity_mc", "intensity_analytic"};
  const cplx c1 = noise.cf(1);
  for (std::size_t k = 0; k < intensity.size(); ++k) {
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(grid);
    const double exact = 0.5 * (1.0 + (std::polar(1.0, phi) * c1).real());
    o.table.rows.push_back({phi, intensity[k], exact});
  }
  json s;
  s["phase_difference"] = phase_difference(p);
  s["mean"] = {{"analytic", complex_json(stats.analytic_mean)},
               {"mc", complex_json(stats.mc_mean.value)},
               {"std_error", stats.mc_mean.std_error}};
  s["variance"] = {{"paper_form", complex_json(stats.analytic_variance.paper_form)},
                   {"exact_form", complex_json(stats.analytic_variance.exact_form)},
                   {"mc", complex_json(stats.mc_variance)},
                   {"std_error", json::array({stats.mc_variance_se_re, stats.mc_variance_se_im})}};
  s["visibility"] = {{"analytic", vis.analytic},
                     {"empirical", vis.empirical},
                     {"std_error", vis.std_error}};
  o.summary = s;
  return o;
}

Outcome cmd_phasor(const json& cfg, std::ostream&) {
  std::vector<PhasorTerm> terms;
  const auto& list = cfg.at("term");
  for (std::size_t j = 0; j < list.size(); ++j)
    terms.push_back(parse_term_spec(list[j].get<std::string>(), "term[" + std::to_string(j) + "]"));
  if (terms.empty()) throw ConfigError("term", "at least one term is required");
  const PhasorSum sum(std::move(terms));
  const auto n = mc_count(cfg, kMinOracleCount);
  const auto est = estimate_phasor(sum, count(cfg, "seed"), n);
  const cplx mean = sum_mean(sum);
  const cplx exact = sum_variance_exact(sum);
  const cplx paper = sum_variance_paper(sum);

  Outcome o;
  o.table.columns = {"quantity", "exact", "paper", "mc", "std_err"};
  o.table.rows.push_back({std::string("mean_re"), mean.real(), mean.real(), est.mean.value.real(),
                          est.mean.std_error});
  o.table.rows.push_back({std::string("mean_im"), mean.imag(), mean.imag(), est.mean.value.imag(),
                          est.mean.std_error});
  o.table.rows.push_back({std::string("var_re"), exact.real(), paper.real(), est.variance.real(),
                          est.std_error_re});
  o.table.rows.push_back({std::string("var_im"), exact.imag(), paper.imag(), est.variance.imag(),
                          est.std_error_im});
  json s;
  s["terms"] = list.size();
  s["mean"] = {{"analytic", complex_json(mean)},
               {"mc", complex_json(est.mean.value)},
               {"std_error", est.mean.std_error}};
  s["variance"] = {{"exact", complex_json(exact)},
                   {"paper", complex_json(paper)},
                   {"mc", complex_json(est.variance)},
                   {"std_error", json::array({est.std_error_re, est.std_error_im})}};
  o.summary = s;
  return o;
}

Wavefront make_wavefront(const std::string& spec, double t1) {
  const std::string field = "wavefront";
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ConfigError(field, "expected ones:N, sine:N or csv:PATH");
  const std::string head = lower(spec.substr(0, colon));
  const std::string rest = spec.substr(colon + 1);
  if (head == "csv") {
    std::ifstream in(rest);
    if (!in) throw ConfigError(field, "cannot open '" + rest + "'");
    return field_guard(field, [&] { return read_wavefront_csv(in, t1); });
  }
  const auto n = parse_count(rest, field);
  if (n < Wavefront::kMinNodes || n > 1'000'000)
    throw ConfigError(field, "node count must lie in [8, 1e6]");
  auto grid = Wavefront::uniform_grid(n);
  std::vector<cplx> amp(n);
  if (head == "ones") {
    std::fill(amp.begin(), amp.end(), cplx(1.0, 0.0));
  } else if (head == "sine") {
    for (std::size_t k = 0; k < n; ++k) amp[k] = std::sin(grid[k]);
  } else {
    throw ConfigError(field, "unknown wavefront form '" + head + "'");
  }
  return Wavefront(std::move(grid), std::move(amp), t1);
}

GainPattern make_gain(const json& g) {
  return field_guard("gain", [&]() -> GainPattern {
    const double offset = g.at("offset").get<double>();
    const int m = static_cast<int>(g.at("m").get<std::uint64_t>());
    const int n = static_cast<int>(g.at("n").get<std::uint64_t>());
    if (g.contains("laws")) {
      std::vector<AmplitudeLaw> laws;
      for (const auto& l : g["laws"]) laws.push_back(parse_amplitude_spec(l.get<std::string>(), "gain.laws"));
      return GainPattern(m, n, std::move(laws), offset);
    }
    return GainPattern(m, n, g.at("coefficients").get<std::vector<double>>(), offset);
  });
}

Outcome cmd_huygens(const json& cfg, std::ostream&) {
  const double t1 = real(cfg, "t1");
  const double t2 = real(cfg, "t2");
  if (!(t2 > t1)) throw ConfigError("t2", "must exceed t1");
  const auto w = make_wavefront(text(cfg, "wavefront"), t1);
  const auto g = make_gain(cfg.at("gain"));
  const auto out = propagate(w, g, t2);

  Outcome o;
  o.table.columns = {"theta", "re", "im"};
  std::optional<EnsembleIntensity> ens;
  if (g.is_random()) {
    const auto draws = count(cfg, "draws");
    if (draws < kMinEnsembleDraws || draws > 10'000'000)
      throw ConfigError("draws", "must lie in [100, 1e7]");
    ens = ensemble_propagate(w, g, t2, count(cfg, "seed"), draws);
    o.table.columns.push_back("mean_intensity");
    o.table.columns.push_back("var_intensity");
  }
  double lo = INFINITY;
  double hi = -INFINITY;
  for (std::size_t k = 0; k < out.size(); ++k) {
    const cplx a = out.amplitudes()[k];
    lo = std::min(lo, std::abs(a));
    hi = std::max(hi, std::abs(a));
    std::vector<Cell> row{out.grid()[k], a.real(), a.imag()};
    if (ens) {
      row.push_back(ens->mean[k]);
      row.push_back(ens->variance[k]);
    }
    o.table.rows.push_back(std::move(row));
  }
  json s;
  s["nodes"] = out.size();
  s["time"] = out.time_stamp();
  s["min_abs"] = lo;
  s["max_abs"] = hi;
  s["random_gain"] = g.is_random();
  if (ens) {
    double vmax = 0.0;
    for (double v : ens->variance) vmax = std::max(vmax, v);
    s["draws"] = ens->draws;
    s["max_intensity_variance"] = vmax;
  }
  o.summary = s;
  return o;
}

Outcome cmd_metric(const json& cfg, std::ostream&) {
  const double r = real(cfg, "r");
  if (!(r >= 0.0)) throw ConfigError("r", "must be non-negative");
  const double sep = real(cfg, "s");
  if (!(sep > 0.0)) throw ConfigError("s", "must be positive");
  const auto noise = parse_angle_spec(text(cfg, "noise"), "noise");
  const auto n = mc_count(cfg, kMinOracleCount, kMaxMetricCount);
  const auto seed = count(cfg, "seed");
  const double dev = metric_invariance(r, seed, n);
  const auto ph = metric_phase(sep, noise, CounterRng(seed).split(1).key(), n);

  Outcome o;
  o.table.columns = {"quantity", "value"};
  o.table.rows.push_back({std::string("max_deviation"), dev});
  o.table.rows.push_back({std::string("phase_mean_re"), ph.mc_mean.value.real()});
  o.table.rows.push_back({std::string("phase_mean_im"), ph.mc_mean.value.imag()});
  o.table.rows.push_back({std::string("phase_var_re"), ph.mc_variance.real()});
  o.table.rows.push_back({std::string("phase_var_im"), ph.mc_variance.imag()});
  json s;
  s["max_deviation"] = dev;
  s["phase_mean"] = {{"analytic", complex_json(ph.analytic_mean)},
                     {"mc", complex_json(ph.mc_mean.value)},
                     {"std_error", ph.mc_mean.std_error}};
  s["phase_variance"] = {{"paper_form", complex_json(ph.analytic_variance.paper_form)},
                         {"exact_form", complex_json(ph.analytic_variance.exact_form)},
                         {"mc", complex_json(ph.mc_variance)},
                         {"std_error", json::array({ph.mc_variance_se_re, ph.mc_variance_se_im})}};
  o.summary = s;
  return o;
}

void write_file(const std::string& path, const std::string& content, const std::string& field) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError(field, "cannot write '" + path + "'");
  f << content;
  if (!f) throw ConfigError(field, "write failed for '" + path + "'");
}

Outcome cmd_validate(const json& cfg, std::ostream& err) {
  std::vector<std::string> groups;
  for (const auto& g : cfg.at("only")) {
    const auto name = lower(g.get<std::string>());
    const auto& known = report_groups();
    if (std::find(known.begin(), known.end(), name) == known.end())
      throw ConfigError("only", "unknown group '" + name + "'");
    groups.push_back(name);
  }
  if (groups.empty()) groups = report_groups();
  const auto golden_path = text(cfg, "golden");
  std::ifstream gin(golden_path);
  if (!gin) throw ConfigError("golden", "cannot open '" + golden_path + "'");
  std::stringstream gtext;
  gtext << gin.rdbuf();
  const auto golden = field_guard("golden", [&] { return parse_golden(gtext.str()); });
  const auto n = mc_count(cfg, kMinOracleCount);

  const auto report = build_report(groups, count(cfg, "seed"), n);
  const auto mismatches = compare_with_golden(report, golden, groups);

  Outcome o;
  if (const auto p = text(cfg, "csv"); !p.empty()) write_file(p, report.to_csv(), "csv");
  if (const auto p = text(cfg, "text"); !p.empty())
    write_file(p, report.to_text(), "text");
  else
    o.text = report.to_text();
  for (const auto& m : mismatches) err << "mismatch: " << m << '\n';
  err << "validate: " << report.rows.size() << " rows, " << mismatches.size()
      << " golden mismatches\n";
  o.status = mismatches.empty() ? 0 : 1;
  return o;
}

const std::vector<Command>& commands() {
  static const std::vector<Command> all = [] {
    std::vector<Command> c;
    c.push_back({"cf", "tabulate the characteristic function over an omega grid",
                 join(transform_fields(),
                      std::vector<Field>{{"omega", FieldType::Range, "0:10:0.5", "lo:hi:step"},
                                         seed_field(),
                                         {"count", FieldType::Count, 100000, "MC samples per row"}},
                      output_fields(false)),
                 cmd_cf});
    c.push_back({"pdf", "tabulate the density",
                 join(transform_fields(),
                      std::vector<Field>{{"y", FieldType::Range, "", "lo:hi:step (default Chebyshev nodes)"},
                                         {"points", FieldType::Count, 4096, "Chebyshev node count"}},
                      output_fields(false)),
                 cmd_pdf});
    c.push_back({"moments", "moments by the Bessel and Chebyshev routes and MC",
                 join(transform_fields(),
                      std::vector<Field>{{"max_m", FieldType::Count, 4, "highest moment"},
                                         seed_field(),
                                         {"count", FieldType::Count, 1000000, "MC samples"}},
                      output_fields(false)),
                 cmd_moments});
    c.push_back({"ab", "flux-induced random phase shift and fringe visibility",
                 join(std::vector<Field>{{"noise", FieldType::Text, nullptr, "noise distribution"},
                                         {"coupling", FieldType::Real, 1.0, "coupling constant"},
                                         {"flux", FieldType::Real, 1.0, "enclosed flux"},
                                         {"grid", FieldType::Count, 360, "phase grid points"},
                                         seed_field(),
                                         {"count", FieldType::Count, 1000000, "MC samples"}},
                      output_fields(true)),
                 cmd_ab});
    c.push_back({"phasor", "mean and variance of a random phasor sum",
                 join(std::vector<Field>{{"term", FieldType::List, nullptr, "amplitude@angle, repeatable"},
                                         seed_field(),
                                         {"count", FieldType::Count, 1000000, "MC samples"}},
                      output_fields(true)),
                 cmd_phasor});
    c.push_back({"huygens", "propagate a wavefront through a gain pattern",
                 join(std::vector<Field>{{"wavefront", FieldType::Text, "ones:256", "ones:N, sine:N or csv:PATH"},
                                         {"gain", FieldType::Gain, "const:0.5", "const:C, json:PATH or object"},
                                         {"t1", FieldType::Real, 0.0, "source time"},
                                         {"t2", FieldType::Real, 1.0, "target time"},
                                         seed_field(),
                                         {"draws", FieldType::Count, 1000, "ensemble size for random gains"}},
                      output_fields(true)),
                 cmd_huygens});
    c.push_back({"metric", "rotation invariance of the distance and the metric phase",
                 join(std::vector<Field>{{"r", FieldType::Real, 1.0, "radius"},
                                         {"s", FieldType::Real, 1.0, "separation"},
                                         {"noise", FieldType::Text, "point", "phase noise"},
                                         seed_field(),
                                         {"count", FieldType::Count, 100000, "MC samples"}},
                      output_fields(true)),
                 cmd_metric});
    c.push_back({"validate", "run the oracle suite and compare with the golden verdicts",
                 std::vector<Field>{seed_field(),
                                    {"count", FieldType::Count, kDefaultReportCount, "MC samples per target"},
                                    {"only", FieldType::List, json::array(), "restrict to a group, repeatable"},
                                    {"golden", FieldType::Text, RGAUGE_DEFAULT_GOLDEN, "golden verdict list"},
                                    {"csv", FieldType::Text, "", "report CSV path"},
                                    {"text", FieldType::Text, "", "report text path (stdout if empty)"}},
                 cmd_validate});
    return c;
  }();
  return all;
}

// ---- output --------------------------------------------------------------

std::string cell_text(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return fmt17(*d == 0.0 ? 0.0 : *d);
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

json cell_json(const Cell& c) {
  return std::visit([](const auto& v) { return json(v); }, c);
}

std::string render(const Table& t, const std::string& format) {
  if (format == "json") {
    json j;
    j["columns"] = t.columns;
    j["rows"] = json::array();
    for (const auto& r : t.rows) {
      json row = json::array();
      for (const auto& c : r) row.push_back(cell_json(c));
      j["rows"].push_back(row);
    }
    return j.dump(1) + "\n";
  }
  std::string s;
  for (std::size_t i = 0; i < t.columns.size(); ++i) s += (i ? "," : "") + t.columns[i];
  s += '\n';
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + cell_text(r[i]);
    s += '\n';
  }
  return s;
}

json effective_config(const Command& cmd, const std::map<std::string, json>& flags,
                      const std::string& config_path) {
  json raw = json::object();
  for (const auto& f : cmd.fields) {
    if (!f.fallback.is_null()) raw[f.key] = f.fallback;
    if (f.type == FieldType::Seed)
      if (const char* env = std::getenv(kSeedEnv); env && *env) raw[f.key] = std::string(env);
  }
  for (const auto& [k, v] : flags) raw[k] = v;
  if (!config_path.empty()) {
    const json file = read_json_file(config_path, "config");
    if (!file.is_object()) throw ConfigError("config", "top level must be an object");
    for (const auto& [k, v] : file.items()) {
      if (k == "command") {
        if (v != cmd.name)
          throw ConfigError("command", "config is for '" + v.dump() + "', not '" + cmd.name + "'");
        continue;
      }
      const bool known = std::any_of(cmd.fields.begin(), cmd.fields.end(),
                                     [&](const Field& f) { return f.key == k; });
      if (!known) throw ConfigError(k, "unknown key for '" + cmd.name + "'");
      raw[k] = v;
    }
  }
  json cfg = json::object();
  cfg["command"] = cmd.name;
  for (const auto& f : cmd.fields) {
    if (!raw.contains(f.key)) throw ConfigError(f.key, "is required");
    cfg[f.key] = normalise(f, raw[f.key]);
  }
  if (cfg.contains("format")) {
    const auto fmt = lower(cfg["format"].get<std::string>());
    if (fmt != "csv" && fmt != "json") throw ConfigError("format", "expected csv or json");
    cfg["format"] = fmt;
  }
  return cfg;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random-angle sinusoid statistics and random gauge simulations"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned threads = 0;
  app.add_option("--threads", threads, "worker threads (default: RGAUGE_THREADS or all cores)");

  struct Bound {
    CLI::App* sub;
    std::map<std::string, std::string> scalars;
    std::map<std::string, std::vector<std::string>> lists;
    std::string config;
  };
  const auto& cmds = commands();
  std::vector<Bound> bound(cmds.size());
  for (std::size_t i = 0; i < cmds.size(); ++i) {
    auto& b = bound[i];
    b.sub = app.add_subcommand(cmds[i].name, cmds[i].help);
    b.sub->add_option("--config", b.config, "JSON file; its values override flags");
    for (const auto& f : cmds[i].fields) {
      std::string help = f.help;
      if (!f.fallback.is_null())
        help += " [" + (f.fallback.is_string() ? f.fallback.get<std::string>() : f.fallback.dump()) + "]";
      if (f.type == FieldType::List)
        b.sub->add_option(flag_name(f.key), b.lists[f.key], help);
      else
        b.sub->add_option(flag_name(f.key), b.scalars[f.key], help);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (threads > 0) set_thread_count(threads);

  for (std::size_t i = 0; i < cmds.size(); ++i) {
    if (!bound[i].sub->parsed()) continue;
    const Command& cmd = cmds[i];
    const Bound& b = bound[i];
    try {
      std::map<std::string, json> flags;
      for (const auto& f : cmd.fields) {
        const auto* opt = b.sub->get_option(flag_name(f.key));
        if (opt->count() == 0) continue;
        if (f.type == FieldType::List)
          flags[f.key] = b.lists.at(f.key);
        else
          flags[f.key] = b.scalars.at(f.key);
      }
      const json cfg = effective_config(cmd, flags, b.config);
      err << "config: " << cfg.dump() << '\n';

      Outcome o = cmd.run(cfg, err);
      for (const auto& w : o.warnings) err << "warning: " << w << '\n';
      if (cmd.name == "validate") {
        out << o.text;
        return o.status;
      }
      // Everything is rendered before any file is touched.
      const std::string table = render(o.table, cfg["format"].get<std::string>());
      const std::string summary = o.summary ? o.summary->dump(1) + "\n" : std::string();
      const auto out_path = cfg["out"].get<std::string>();
      if (out_path.empty())
        out << table;
      else
        write_file(out_path, table, "out");
      if (o.summary) {
        const auto sp = cfg.contains("summary") ? cfg["summary"].get<std::string>() : "";
        if (sp.empty())
          err << "summary: " << summary;
        else
          write_file(sp, summary, "summary");
      }
      return o.status;
    } catch (const ConfigError& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    } catch (const SeriesNotConverged& e) {
      err << "error: " << e.what() << '\n';
      return 1;
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    } catch (const std::out_of_range& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    } catch (const std::domain_error& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    } catch (const std::length_error& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return 1;
    }
  }
  return 2;
}

}  // namespace rgauge::cli
