#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rgauge {

enum class Verdict { Agree, Disagree, Untested };

std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& s);

/// AGREE when the printed value is within 3 standard errors (plus `floor`)
/// of the Monte Carlo estimate; DISAGREE when it is not but the analytic
/// value is; UNTESTED when nothing is printed or MC supports neither side.
Verdict adjudicate(std::optional<double> printed, double analytic, double mc, double std_error,
                   double floor = 0.0);

struct ReportRow {
  std::string id;
  std::string group;
  std::optional<double> printed;
  double analytic = 0.0;
  double mc = 0.0;
  double std_error = 0.0;
  Verdict verdict = Verdict::Untested;
};

struct DiscrepancyReport {
  std::vector<ReportRow> rows;

  /// Header "id,group,printed,analytic,mc,std_error,verdict"; 17 significant digits.
  std::string to_csv() const;
  std::string to_text() const;
};

/// Report groups in build order.
const std::vector<std::string>& report_groups();

inline constexpr std::uint64_t kDefaultMasterSeed = 271828;
inline constexpr std::uint64_t kDefaultReportCount = 10'000'000;

/// Runs every target in the selected groups. Target seeds are derived from
/// the master seed and the target label, so a group's rows do not depend on
/// which other groups are selected. An empty selection gives an empty report.
DiscrepancyReport build_report(const std::vector<std::string>& groups,
                               std::uint64_t master_seed = kDefaultMasterSeed,
                               std::uint64_t count = kDefaultReportCount);

/// Expected verdicts keyed by row id. CSV header "id,verdict".
using GoldenVerdicts = std::map<std::string, Verdict>;

GoldenVerdicts parse_golden(const std::string& csv_text);

/// Group of a row id: the text before the first '/'.
std::string group_of(const std::string& id);

/// Human-readable mismatches between the report and the golden list,
/// restricted to golden rows of the selected groups. Empty means pass.
std::vector<std::string> compare_with_golden(const DiscrepancyReport& report,
                                             const GoldenVerdicts& golden,
                                             const std::vector<std::string>& groups);

}  // namespace rgauge
