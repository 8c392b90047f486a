#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rgauge/report.hpp"
#include "rgauge/sintrans.hpp"

namespace rgauge {

/// Closed-form moment from the reference corollary table, transcribed
/// literally (including the constants and prefactors that the
/// Monte Carlo oracle contradicts):
///   zero-mean Gaussian  m1 = 0, m2 = (A^2/2)(1 - e^{-2 s^2}), m3 = 0,
///                       m4 = (A^4/8)(e^{-8 s^2} - 4 e^{-2 s^2} + 3), "for either transformation"
///   Gaussian, mean t0   m1 = 2 e^{-s^2/2} cos(t0) A, m2 = 2 [1 - e^{-2 s^2} cos 2t0] A^2,
///                       m4 = (A^4/8)[e^{-8 s^2} cos 4t0 - 4 e^{-2 s^2} cos 2t0 + 6]
///   Laplace             m1 = 0, m2 = 2 A^2 [1 - a^2/(a^2+4)],
///                       m4 = (A^4/8)[a^2/(a^2+16) - 4a^2/(a^2+4) + 6]
///   Cauchy              m1 = 0, m2 = 2 A^2 [1 - e^{-2a}], m4 = (A^4/8)[e^{-4a} - 4e^{-2a} + 6]
///   Uniform, Triangular m2 = (A^2/4)[2 - (F(2) + F(-2))], claimed for sin and cos alike
/// Returns nullopt where nothing is printed.
std::optional<double> printed_moment(const SinusoidalTransform& t, int m);

/// Rows m = 1..4: printed value, moment_bessel, and a Monte Carlo estimate
/// with verdict. Row ids are "<prefix>/m<k>".
std::vector<ReportRow> corollary_report(const SinusoidalTransform& t, std::uint64_t seed,
                                        std::uint64_t count, const std::string& id_prefix,
                                        const std::string& group);

}  // namespace rgauge
