#include "rgauge/spec_parse.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>

namespace rgauge::cli {
namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

struct ParsedSpec {
  std::string name;
  std::map<std::string, double> params;
};

ParsedSpec split_spec(const std::string& text, const std::string& field) {
  ParsedSpec p;
  const auto colon = text.find(':');
  p.name = lower(trim(text.substr(0, colon)));
  if (p.name.empty()) throw ConfigError(field, "empty specification");
  if (colon == std::string::npos) return p;
  std::string rest = text.substr(colon + 1);
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    const auto comma = rest.find(',', pos);
    const std::string item = trim(rest.substr(pos, comma - pos));
    if (!item.empty()) {
      const auto eq = item.find('=');
      if (eq == std::string::npos)
        throw ConfigError(field, "parameter '" + item + "' is not key=value");
      const std::string key = lower(trim(item.substr(0, eq)));
      if (p.params.count(key)) throw ConfigError(field, "parameter '" + key + "' given twice");
      p.params[key] = parse_real(trim(item.substr(eq + 1)), field + "." + key);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return p;
}

void allow_only(const ParsedSpec& p, std::initializer_list<const char*> keys,
                const std::string& field) {
  for (const auto& [k, v] : p.params) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; }))
      throw ConfigError(field, "unknown parameter '" + k + "' for '" + p.name + "'");
  }
}

double need(const ParsedSpec& p, const char* key, const std::string& field) {
  const auto it = p.params.find(key);
  if (it == p.params.end())
    throw ConfigError(field, "'" + p.name + "' needs parameter '" + key + "'");
  return it->second;
}

template <class F>
auto guarded(const std::string& field, F&& make) {
  try {
    return make();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(field, e.what());
  }
}

}  // namespace

double parse_real(const std::string& text, const std::string& field) {
  const std::string s = trim(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ConfigError(field, "'" + text + "' is not a number");
  }
  if (used != s.size()) throw ConfigError(field, "'" + text + "' is not a number");
  if (!std::isfinite(v)) throw ConfigError(field, "'" + text + "' is not finite");
  return v;
}

std::uint64_t parse_count(const std::string& text, const std::string& field) {
  const double v = parse_real(text, field);
  if (v < 0.0 || v != std::floor(v) || v > 9.0e15)
    throw ConfigError(field, "'" + text + "' is not a non-negative integer");
  return static_cast<std::uint64_t>(v);
}

std::vector<double> parse_range(const std::string& text, const std::string& field) {
  const auto first = text.find(':');
  if (first == std::string::npos) return {parse_real(text, field)};
  const auto second = text.find(':', first + 1);
  if (second == std::string::npos) throw ConfigError(field, "range must be lo:hi:step");
  const double lo = parse_real(text.substr(0, first), field);
  const double hi = parse_real(text.substr(first + 1, second - first - 1), field);
  const double step = parse_real(text.substr(second + 1), field);
  if (!(step > 0.0)) throw ConfigError(field, "range step must be positive");
  if (hi < lo) throw ConfigError(field, "range upper end below lower end");
  const double span = (hi - lo) / step;
  if (span > 1e7) throw ConfigError(field, "range has too many points");
  const auto n = static_cast<std::uint64_t>(std::floor(span + 1e-9));
  std::vector<double> out;
  out.reserve(n + 1);
  for (std::uint64_t k = 0; k <= n; ++k) out.push_back(lo + static_cast<double>(k) * step);
  return out;
}

AngleDistribution parse_angle_spec(const std::string& text, const std::string& field) {
  const ParsedSpec p = split_spec(text, field);
  return guarded(field, [&]() -> AngleDistribution {
    if (p.name == "uniform") {
      allow_only(p, {}, field);
      return AngleDistribution::uniform();
    }
    if (p.name == "gaussian" || p.name == "normal") {
      allow_only(p, {"sigma", "theta0"}, field);
      const double sigma = need(p, "sigma", field);
      if (p.params.count("theta0")) return AngleDistribution::gaussian(sigma, p.params.at("theta0"));
      return AngleDistribution::gaussian_zero_mean(sigma);
    }
    if (p.name == "laplace") {
      allow_only(p, {"alpha"}, field);
      return AngleDistribution::laplace(need(p, "alpha", field));
    }
    if (p.name == "cauchy") {
      allow_only(p, {"alpha"}, field);
      return AngleDistribution::cauchy(need(p, "alpha", field));
    }
    if (p.name == "triangular") {
      allow_only(p, {"a"}, field);
      return AngleDistribution::triangular(need(p, "a", field));
    }
    if (p.name == "point") {
      allow_only(p, {"theta"}, field);
      const auto it = p.params.find("theta");
      return AngleDistribution::point_mass(it == p.params.end() ? 0.0 : it->second);
    }
    throw ConfigError(field, "unknown distribution '" + p.name + "'");
  });
}

AmplitudeLaw parse_amplitude_spec(const std::string& text, const std::string& field) {
  const ParsedSpec p = split_spec(text, field);
  return guarded(field, [&]() -> AmplitudeLaw {
    if (p.name == "det" || p.name == "deterministic") {
      allow_only(p, {"value"}, field);
      return AmplitudeLaw::deterministic(need(p, "value", field));
    }
    if (p.name == "uniform") {
      allow_only(p, {"lo", "hi"}, field);
      return AmplitudeLaw::uniform(need(p, "lo", field), need(p, "hi", field));
    }
    if (p.name == "gaussian" || p.name == "normal") {
      allow_only(p, {"mean", "std"}, field);
      return AmplitudeLaw::gaussian(need(p, "mean", field), need(p, "std", field));
    }
    throw ConfigError(field, "unknown amplitude law '" + p.name + "'");
  });
}

PhasorTerm parse_term_spec(const std::string& text, const std::string& field) {
  const auto at = text.find('@');
  if (at == std::string::npos) throw ConfigError(field, "term must be amplitude@angle");
  return {parse_amplitude_spec(text.substr(0, at), field + ".amplitude"),
          parse_angle_spec(text.substr(at + 1), field + ".angle")};
}

}  // namespace rgauge::cli
