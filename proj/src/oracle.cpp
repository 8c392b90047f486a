#include "rgauge/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rgauge {
namespace {

void require_oracle_count(std::uint64_t count, const char* op) {
  if (count < kMinOracleCount)
    throw std::invalid_argument(std::string(op) + ": count " + std::to_string(count) +
                                " below 1000");
  if (count > kMaxSampleCount)
    throw std::length_error(std::string(op) + ": count " + std::to_string(count) + " exceeds 1e8");
}

template <std::size_t K>
std::vector<McEstimate<double>> power_moments(const SinusoidalTransform& t, int max_m,
                                              std::uint64_t seed, std::uint64_t count) {
  const CounterRng rng(seed);
  const auto stats = chunked_moments<K>(count, [&](std::uint64_t i, std::array<double, K>& out) {
    const double x = t.apply(t.dist().draw(rng, i));
    double p = 1.0;
    for (std::size_t k = 0; k < K; ++k) {
      p *= x;
      out[k] = p;
    }
  });
  std::vector<McEstimate<double>> out;
  for (int m = 1; m <= max_m; ++m)
    out.push_back({stats[m - 1].mean, stats[m - 1].std_error(), count, seed});
  return out;
}

}  // namespace

std::vector<McEstimate<double>> estimate_moments(const SinusoidalTransform& t, int max_m,
                                                 std::uint64_t seed, std::uint64_t count) {
  require_oracle_count(count, "estimate_moments");
  if (max_m < 1 || max_m > kMaxMomentOrder)
    throw std::out_of_range("estimate_moments: max order " + std::to_string(max_m) +
                            " outside [1, 12]");
  if (max_m <= 4) return power_moments<4>(t, max_m, seed, count);
  return power_moments<kMaxMomentOrder>(t, max_m, seed, count);
}

McEstimate<double> estimate_moment(const SinusoidalTransform& t, int m, std::uint64_t seed,
                                   std::uint64_t count) {
  require_oracle_count(count, "estimate_moment");
  if (m < 0 || m > kMaxMomentOrder)
    throw std::out_of_range("estimate_moment: order " + std::to_string(m) + " outside [0, 12]");
  if (m == 0) return {1.0, 0.0, count, seed};
  return estimate_moments(t, m, seed, count)[m - 1];
}

McEstimate<std::complex<double>> estimate_cf(const SinusoidalTransform& t, double omega,
                                             std::uint64_t seed, std::uint64_t count) {
  require_oracle_count(count, "estimate_cf");
  if (!std::isfinite(omega)) throw std::domain_error("estimate_cf: omega is not finite");
  if (omega == 0.0) return {1.0, 0.0, count, seed};
  const CounterRng rng(seed);
  const auto stats = chunked_moments<2>(count, [&](std::uint64_t i, std::array<double, 2>& out) {
    const double phase = omega * t.apply(t.dist().draw(rng, i));
    out[0] = std::cos(phase);
    out[1] = std::sin(phase);
  });
  const double se = std::sqrt((stats[0].sample_variance() + stats[1].sample_variance()) /
                              static_cast<double>(count));
  return {{stats[0].mean, stats[1].mean}, se, count, seed};
}

PhasorEstimate estimate_phasor(const PhasorSum& s, std::uint64_t seed, std::uint64_t count) {
  require_oracle_count(count, "estimate_phasor");
  const CounterRng root(seed);
  const auto first = chunked_moments<2>(count, [&](std::uint64_t i, std::array<double, 2>& out) {
    const auto z = draw_sum(s, root, i);
    out[0] = z.real();
    out[1] = z.imag();
  });
  const double mre = first[0].mean;
  const double mim = first[1].mean;
  const auto second = chunked_moments<2>(count, [&](std::uint64_t i, std::array<double, 2>& out) {
    const auto z = draw_sum(s, root, i);
    out[0] = (z.real() - mre) * (z.real() - mre);
    out[1] = (z.imag() - mim) * (z.imag() - mim);
  });

  PhasorEstimate e;
  e.mean = {{mre, mim},
            std::sqrt((first[0].sample_variance() + first[1].sample_variance()) /
                      static_cast<double>(count)),
            count,
            seed};
  e.variance = {second[0].mean, second[1].mean};
  e.std_error_re = second[0].std_error();
  e.std_error_im = second[1].std_error();
  return e;
}

}  // namespace rgauge
