#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <span>

namespace geotail::numeric {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// lambda - 1 - ln(lambda), accurate near lambda = 1.
double lambda_exponent(double lambda) noexcept;

/// x + ln(1 - x) for x < 1, without cancellation for small |x|.
double x_plus_log1m(double x) noexcept;

/// ln(exp(a) + exp(b)).
double log_add(double a, double b) noexcept;

/// ln(1 - exp(a)) for a <= 0.
double log1mexp(double a) noexcept;

/// a * b where 0 * (+-inf) is taken to be 0.
double mul_zero_inf(double a, double b) noexcept;

struct Minimum {
  double x = 0.0;
  double value = 0.0;
  int iterations = 0;
};

struct GoldenOptions {
  double rel_width = 1e-12;
  int max_iterations = 200;
  /// When set, each new bracket is checked for convexity and a violation
  /// raises Error(NotUnimodal).
  bool check_convexity = false;
};

/// Golden-section minimisation on [lo, hi]. The returned point is the best
/// evaluated point, endpoints included.
Minimum golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                const GoldenOptions& opts = {});

}  // namespace geotail::numeric
