#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <string_view>
#include <thread>
#include <vector>

namespace rgauge {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// 64-bit FNV-1a; stable across platforms (unlike std::hash).
constexpr std::uint64_t hash_label(std::string_view label) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Counter-based generator.
///
/// Output number `i` of a stream with key `k` is `mix64(k + (i + 1) * gamma)`,
/// i.e. the SplitMix64 sequence addressed by position. Any draw can be
/// produced independently of every other draw, so chunked parallel sampling
/// gives the same numbers regardless of how chunks are scheduled.
///
/// Child streams are derived with `split(id)`: the child key is
/// `mix64(k ^ mix64(id + gamma))`. Every consumer in the library that needs
/// several independent sequences (per phasor term, per coefficient entry,
/// per report target) derives them this way from one seed.
class CounterRng {
 public:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  constexpr explicit CounterRng(std::uint64_t key) noexcept : key_(key) {}

  constexpr std::uint64_t key() const noexcept { return key_; }

  constexpr std::uint64_t bits(std::uint64_t counter) const noexcept {
    return mix64(key_ + (counter + 1) * kGamma);
  }

  /// Uniform on [0, 1) with 53 random bits.
  constexpr double uniform(std::uint64_t counter) const noexcept {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
  }

  /// Uniform on the open interval (0, 1).
  constexpr double uniform_open(std::uint64_t counter) const noexcept {
    return (static_cast<double>(bits(counter) >> 11) + 0.5) * 0x1.0p-53;
  }

  constexpr CounterRng split(std::uint64_t stream) const noexcept {
    return CounterRng(mix64(key_ ^ mix64(stream + kGamma)));
  }

 private:
  std::uint64_t key_;
};

/// Worker count for chunked Monte Carlo loops. Zero means "auto":
/// $RGAUGE_THREADS if set, otherwise hardware concurrency.
void set_thread_count(unsigned threads);
unsigned thread_count();

inline constexpr std::uint64_t kChunkSize = 1u << 16;

/// Evaluates `fn(begin, end)` over fixed-size chunks of [0, count) on the
/// worker pool and returns the per-chunk results in chunk order. Chunk
/// boundaries depend only on `count`, so any in-order reduction of the
/// result is independent of the thread count.
template <class Partial, class ChunkFn>
std::vector<Partial> run_chunks(std::uint64_t count, ChunkFn&& fn) {
  const std::uint64_t chunks = (count + kChunkSize - 1) / kChunkSize;
  std::vector<Partial> out(chunks);
  if (chunks == 0) return out;

  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(thread_count(), chunks));
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      const std::uint64_t begin = c * kChunkSize;
      const std::uint64_t end = std::min(count, begin + kChunkSize);
      out[c] = fn(begin, end);
    }
  };
  if (workers <= 1) {
    work();
    return out;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  return out;
}

}  // namespace rgauge
