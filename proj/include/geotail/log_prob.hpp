#pragma once

#include <cmath>
#include <limits>

namespace geotail {

/// A probability stored as its natural logarithm. Values are clamped to
/// [0, 1] on the way in, so log_value() is always <= 0 (or -inf for zero).
class LogProb {
 public:
  constexpr LogProb() = default;

  static LogProb from_log(double log_value) noexcept {
    LogProb p;
    if (std::isnan(log_value)) {
      p.log_value_ = log_value;
    } else {
      p.log_value_ = log_value > 0.0 ? 0.0 : log_value;
    }
    return p;
  }

  static LogProb from_linear(double value) noexcept {
    if (!(value > 0.0)) return zero();
    return from_log(std::log(value));
  }

  static LogProb zero() noexcept { return from_log(-std::numeric_limits<double>::infinity()); }
  static LogProb one() noexcept { return from_log(0.0); }

  double log_value() const noexcept { return log_value_; }
  double value() const noexcept { return std::exp(log_value_); }
  bool is_zero() const noexcept { return log_value_ == -std::numeric_limits<double>::infinity(); }

  friend bool operator==(LogProb a, LogProb b) noexcept { return a.log_value_ == b.log_value_; }
  friend auto operator<=>(LogProb a, LogProb b) noexcept { return a.log_value_ <=> b.log_value_; }

 private:
  double log_value_ = 0.0;
};

}  // namespace geotail
