#include "rgauge/rng.hpp"

#include <cstdlib>
#include <string>

namespace rgauge {
namespace {

std::atomic<unsigned> g_threads{0};

unsigned auto_threads() {
  if (const char* env = std::getenv("RGAUGE_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace

void set_thread_count(unsigned threads) { g_threads = threads; }

unsigned thread_count() {
  const unsigned t = g_threads.load();
  return t == 0 ? auto_threads() : t;
}

}  // namespace rgauge
