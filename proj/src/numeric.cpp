#include "geotail/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "geotail/error.hpp"

namespace geotail {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyParams: return "EmptyParams";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::LambdaOutOfRange: return "LambdaOutOfRange";
    case ErrorKind::KTooSmall: return "KTooSmall";
    case ErrorKind::NegativeX: return "NegativeX";
    case ErrorKind::NotUnimodal: return "NotUnimodal";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace numeric {

double x_plus_log1m(double x) noexcept {
  if (x >= 1.0) return -kInf;
  if (std::abs(x) < 0.125) {
    // -(x^2/2 + x^3/3 + ...)
    double term = x;
    double sum = 0.0;
    for (int k = 2; k < 80; ++k) {
      term *= x;
      const double next = term / k;
      sum += next;
      if (std::abs(next) <= 1e-17 * std::abs(sum)) break;
    }
    return -sum;
  }
  return x + std::log1p(-x);
}

double lambda_exponent(double lambda) noexcept {
  if (lambda == 1.0) return 0.0;
  if (!(lambda > 0.0)) return kInf;
  if (std::isinf(lambda)) return kInf;
  // d - ln(1 + d) with d = lambda - 1; the series branch avoids cancellation.
  const double d = lambda - 1.0;
  if (std::abs(d) < 0.125) return -x_plus_log1m(-d);
  return d - std::log1p(d);
}

double log_add(double a, double b) noexcept {
  if (a == -kInf) return b;
  if (b == -kInf) return a;
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(std::min(a, b) - m));
}

double log1mexp(double a) noexcept {
  if (a > -0.6931471805599453) return std::log(-std::expm1(a));
  return std::log1p(-std::exp(a));
}

double mul_zero_inf(double a, double b) noexcept {
  if (a == 0.0 || b == 0.0) return 0.0;
  return a * b;
}

namespace {

bool convex_triple(double x1, double f1, double x2, double f2, double x3, double f3) {
  if (!std::isfinite(f1) || !std::isfinite(f2) || !std::isfinite(f3)) return true;
  const double chord = f1 + (f3 - f1) * (x2 - x1) / (x3 - x1);
  const double tol = 1e-9 * (std::abs(f1) + std::abs(f2) + std::abs(f3)) + 1e-300;
  return f2 <= chord + tol;
}

}  // namespace

Minimum golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                const GoldenOptions& opts) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double fa = f(a), fb = f(b);
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);

  Minimum best{a, fa, 0};
  auto consider = [&best](double x, double fx) {
    if (fx < best.value) {
      best.x = x;
      best.value = fx;
    }
  };
  consider(b, fb);
  consider(c, fc);
  consider(d, fd);

  const double width0 = hi - lo;
  int it = 0;
  for (; it < opts.max_iterations; ++it) {
    if (opts.check_convexity &&
        (!convex_triple(a, fa, c, fc, d, fd) || !convex_triple(c, fc, d, fd, b, fb))) {
      throw Error(ErrorKind::NotUnimodal,
                  "objective failed a convexity check near x=" + std::to_string(c));
    }
    if (b - a <= opts.rel_width * width0) break;
    if (fc < fd) {
      b = d;
      fb = fd;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
      consider(c, fc);
    } else {
      a = c;
      fa = fc;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
      consider(d, fd);
    }
  }
  best.iterations = it;
  return best;
}

}  // namespace numeric
}  // namespace geotail
