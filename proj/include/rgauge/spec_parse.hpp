#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rgauge/angles.hpp"
#include "rgauge/phasors.hpp"

namespace rgauge::cli {

/// Bad user configuration; `field()` names the offending option.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::invalid_argument("field '" + field + "': " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Distribution mini-syntax: `name[:key=value[,key=value]...]`, names and
/// keys case-insensitive.
///
///   uniform
///   gaussian:sigma=S[,theta0=T]     (alias normal; theta0 given => non-zero-mean kind)
///   laplace:alpha=A
///   cauchy:alpha=A
///   triangular:a=W
///   point[:theta=T]                 (degenerate Gaussian)
AngleDistribution parse_angle_spec(const std::string& text, const std::string& field = "dist");

///   det:value=V   (alias deterministic)
///   uniform:lo=L,hi=H
///   gaussian:mean=M,std=S   (alias normal)
AmplitudeLaw parse_amplitude_spec(const std::string& text, const std::string& field = "amplitude");

/// `amplitude@angle`, e.g. `det:value=1@uniform`.
PhasorTerm parse_term_spec(const std::string& text, const std::string& field = "term");

/// `lo:hi:step` (inclusive of hi up to rounding) or a single number.
std::vector<double> parse_range(const std::string& text, const std::string& field);

/// Non-negative integer; accepts scientific notation such as `1e6`.
std::uint64_t parse_count(const std::string& text, const std::string& field);

double parse_real(const std::string& text, const std::string& field);

}  // namespace rgauge::cli
