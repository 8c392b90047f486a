#pragma once

#include <stdexcept>
#include <string>

namespace rgauge {

/// A truncated series failed to reach its tail tolerance within the order cap.
class SeriesNotConverged : public std::runtime_error {
 public:
  SeriesNotConverged(const std::string& what, int terms_used)
      : std::runtime_error(what), terms_used_(terms_used) {}

  int terms_used() const noexcept { return terms_used_; }

 private:
  int terms_used_;
};

/// Two analytic routes disagreed beyond rounding; indicates a bug, not bad input.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rgauge
