#pragma once

#include <iosfwd>

namespace rgauge::cli {

/// Environment variable consulted for the default seed of every command.
inline constexpr const char* kSeedEnv = "RGAUGE_SEED";

/// Runs the command line in-process. Exit codes: 0 success, 1 run failure or
/// golden mismatch, 2 bad configuration.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rgauge::cli
