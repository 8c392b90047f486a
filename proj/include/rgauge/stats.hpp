#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>

#include "rgauge/rng.hpp"

namespace rgauge {

/// A Monte Carlo estimate. For complex values the standard error is
/// sqrt((Var Re + Var Im) / count).
template <class T>
struct McEstimate {
  T value{};
  double std_error = 0.0;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
};

/// Count, mean and sum of squared deviations; mergeable (Chan et al.).
struct RunningMoments {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void merge(const RunningMoments& other) noexcept {
    if (other.n == 0) return;
    if (n == 0) {
      *this = other;
      return;
    }
    const double total = static_cast<double>(n + other.n);
    const double delta = other.mean - mean;
    mean += delta * (static_cast<double>(other.n) / total);
    m2 += other.m2 + delta * delta * (static_cast<double>(n) * static_cast<double>(other.n) / total);
    n += other.n;
  }

  /// Unbiased sample variance.
  double sample_variance() const noexcept {
    return n > 1 ? std::max(0.0, m2 / static_cast<double>(n - 1)) : 0.0;
  }

  double std_error() const noexcept {
    return n > 0 ? std::sqrt(sample_variance() / static_cast<double>(n)) : 0.0;
  }
};

/// Shifted-sum accumulator for one chunk. Shifting by the first value keeps
/// constant streams exact: mean equals the value and m2 is zero.
class ShiftedAccumulator {
 public:
  void add(double y) noexcept {
    if (n_ == 0) shift_ = y;
    const double d = y - shift_;
    s1_ += d;
    s2_ += d * d;
    ++n_;
  }

  RunningMoments finish() const noexcept {
    RunningMoments r;
    if (n_ == 0) return r;
    const double nd = static_cast<double>(n_);
    r.n = n_;
    r.mean = shift_ + s1_ / nd;
    r.m2 = std::max(0.0, s2_ - s1_ * s1_ / nd);
    return r;
  }

 private:
  std::uint64_t n_ = 0;
  double shift_ = 0.0;
  double s1_ = 0.0;
  double s2_ = 0.0;
};

/// Runs `fn(i, out)` for i in [0, count), filling K values per draw, and
/// returns mergeable moments of each of the K columns. Reduction is in
/// chunk order, so results do not depend on the thread count.
template <std::size_t K, class ValueFn>
std::array<RunningMoments, K> chunked_moments(std::uint64_t count, ValueFn&& fn) {
  using Partial = std::array<RunningMoments, K>;
  auto partials = run_chunks<Partial>(count, [&](std::uint64_t begin, std::uint64_t end) {
    std::array<ShiftedAccumulator, K> acc{};
    std::array<double, K> values{};
    for (std::uint64_t i = begin; i < end; ++i) {
      fn(i, values);
      for (std::size_t k = 0; k < K; ++k) acc[k].add(values[k]);
    }
    Partial p;
    for (std::size_t k = 0; k < K; ++k) p[k] = acc[k].finish();
    return p;
  });
  Partial total{};
  for (const auto& p : partials)
    for (std::size_t k = 0; k < K; ++k) total[k].merge(p[k]);
  return total;
}

}  // namespace rgauge
