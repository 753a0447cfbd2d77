#include "geotail/geom_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "geotail/error.hpp"
#include "geotail/numeric.hpp"

namespace geotail {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kEdge = 1e-12;

void require_upper(double lambda) {
  TailQuery{0.0, lambda}.require(TailSide::Upper);
}

}  // namespace

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::Thm1: return "thm1";
    case Method::Thm2: return "thm2";
    case Method::Cor1: return "cor1";
    case Method::Cor2: return "cor2";
    case Method::TL1: return "tl1";
    case Method::TL: return "tl";
    case Method::Lemma1: return "lemma1";
    case Method::OptChernoff: return "opt-chernoff";
    case Method::OptLemma1: return "opt-lemma1";
    case Method::TexpI: return "texp-i";
    case Method::TexpII: return "texp-ii";
    case Method::TexpIII: return "texp-iii";
    case Method::TexpIV: return "texp-iv";
  }
  return "unknown";
}

BoundKind kind_of(Method m) noexcept {
  switch (m) {
    case Method::TL1:
    case Method::TexpIII: return BoundKind::LowerTailUpper;
    case Method::TL:
    case Method::TexpIV: return BoundKind::UpperTailLower;
    default: return BoundKind::UpperTailUpper;
  }
}

BoundResult make_bound(Method method, double raw_log, double lambda,
                       std::optional<double> internal_param) {
  BoundResult r;
  r.method = method;
  r.lambda = lambda;
  r.internal_param = internal_param;
  r.clamped = raw_log > 0.0;
  r.log_bound = LogProb::from_log(raw_log);
  return r;
}

BoundResult upper_tail_thm1(const GeometricSumSpec& spec, double lambda) {
  require_upper(lambda);
  const double h = numeric::lambda_exponent(lambda);
  const double t = (1.0 - 1.0 / lambda) * spec.p_min();
  return make_bound(Method::Thm1, -spec.p_min() * spec.mu() * h, lambda, t);
}

BoundResult upper_tail_cor1(double lambda) {
  require_upper(lambda);
  return make_bound(Method::Cor1, -numeric::lambda_exponent(lambda), lambda);
}

BoundResult upper_tail_thm2(const GeometricSumSpec& spec, double lambda) {
  require_upper(lambda);
  const double h = numeric::lambda_exponent(lambda);
  const double raw = -std::log(lambda) + numeric::mul_zero_inf(h * spec.mu(), spec.log_q());
  std::optional<double> z;
  if (spec.p_min() < 1.0) z = lemma1_reference_z(spec, lambda);
  return make_bound(Method::Thm2, raw, lambda, z);
}

BoundResult upper_tail_cor2(double lambda) {
  require_upper(lambda);
  return make_bound(Method::Cor2, 1.0 - lambda, lambda);
}

BoundResult lower_tail_tl1(const GeometricSumSpec& spec, double lambda) {
  TailQuery{0.0, lambda}.require(TailSide::Lower);
  const double h = numeric::lambda_exponent(lambda);
  const double t = (1.0 / lambda - 1.0) * spec.p_min();
  return make_bound(Method::TL1, -spec.p_min() * spec.mu() * h, lambda, t);
}

BoundResult upper_tail_lower_bound_tl(const GeometricSumSpec& spec, double lambda) {
  require_upper(lambda);
  const double p = spec.p_min();
  if (p >= 1.0) return make_bound(Method::TL, -numeric::kInf, lambda);
  const double log_q = spec.log_q();
  const double raw = (1.0 + 1.0 / p) * log_q - std::log(2.0 * p * spec.mu()) +
                     numeric::mul_zero_inf((lambda - 1.0) * spec.mu(), log_q);
  return make_bound(Method::TL, raw, lambda);
}

double lemma1_reference_z(const GeometricSumSpec& spec, double lambda) {
  const double p = spec.p_min();
  if (p >= 1.0) return numeric::kInf;
  return (lambda - p) / (lambda * (1.0 - p));
}

BoundResult lemma1_bound(const GeometricSumSpec& spec, double x, double z) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw Error(ErrorKind::DomainError, "lemma1 bound needs a finite x >= 0");
  }
  const double q = 1.0 - spec.p_min();
  if (!(z >= 1.0) || !std::isfinite(z) || z * q >= 1.0) {
    throw Error(ErrorKind::DomainError,
                "lemma1 z = " + std::to_string(z) + " outside [1, 1/(1-p_min))");
  }
  const double prefactor = std::log1p(-z * q) - std::log(spec.p_min());
  const double raw = prefactor - numeric::mul_zero_inf(x, std::log(z)) + log_pgf_geometric(spec, z);
  return make_bound(Method::Lemma1, raw, x / spec.mu(), z);
}

BoundResult optimized_chernoff(const GeometricSumSpec& spec, double lambda) {
  require_upper(lambda);
  if (lambda == 1.0) return make_bound(Method::OptChernoff, 0.0, lambda, 0.0);

  const double lm = lambda * spec.mu();
  const auto& params = spec.params();
  auto g = [&](double t) {
    numeric::CompensatedSum acc;
    acc.add(-t * lm);
    for (double p : params) acc.add(-std::log1p(-t / p));
    return acc.value();
  };
  numeric::GoldenOptions opts;
  opts.check_convexity = true;
  const auto best = numeric::golden_section_minimize(g, 0.0, spec.p_min() * (1.0 - kEdge), opts);
  return make_bound(Method::OptChernoff, std::min(best.value, 0.0), lambda, best.x);
}

BoundResult optimized_lemma1(const GeometricSumSpec& spec, double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw Error(ErrorKind::DomainError, "lemma1 search needs a finite x >= 0");
  }
  const double lambda = x / spec.mu();
  const double p = spec.p_min();
  if (p >= 1.0) {
    // Every X_i is 1, so the bound is z^{n - x}: 1 at z = 1, or 0 as z grows.
    const double n = static_cast<double>(spec.size());
    if (x <= n) return make_bound(Method::OptLemma1, 0.0, lambda, 1.0);
    return make_bound(Method::OptLemma1, -numeric::kInf, lambda);
  }

  const double z_max = (1.0 / (1.0 - p)) * (1.0 - kEdge);
  const double span = z_max - 1.0;
  // Unclamped log-bound; clamping at 1 would flatten the landscape.
  auto raw = [&](double z) {
    z = std::clamp(z, 1.0, z_max);
    return std::log1p(-z * (1.0 - p)) - std::log(p) - numeric::mul_zero_inf(x, std::log(z)) +
           log_pgf_geometric(spec, z);
  };

  std::vector<double> grid;
  constexpr int kLinear = 64;
  constexpr int kLog = 96;
  for (int k = 0; k <= kLinear; ++k) grid.push_back(1.0 + span * k / kLinear);
  for (int j = 1; j <= kLog; ++j) {
    const double frac = std::pow(10.0, -12.0 * j / kLog);
    grid.push_back(z_max - span * frac);
    grid.push_back(1.0 + span * frac);
  }
  if (lambda >= 1.0) grid.push_back(std::clamp(lemma1_reference_z(spec, lambda), 1.0, z_max));
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::size_t best_i = 0;
  double best_v = raw(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double v = raw(grid[i]);
    if (v < best_v) {
      best_v = v;
      best_i = i;
    }
  }
  double best_z = grid[best_i];
  const double lo = grid[best_i == 0 ? 0 : best_i - 1];
  const double hi = grid[std::min(best_i + 1, grid.size() - 1)];
  if (hi > lo) {
    const auto refined = numeric::golden_section_minimize(raw, lo, hi);
    if (refined.value < best_v) {
      best_v = refined.value;
      best_z = refined.x;
    }
  }
  return make_bound(Method::OptLemma1, best_v, lambda, best_z);
}

BoundResult best_upper(const GeometricSumSpec& spec, double lambda) {
  require_upper(lambda);
  const BoundResult candidates[] = {
      upper_tail_thm1(spec, lambda), upper_tail_thm2(spec, lambda),
      upper_tail_cor1(lambda),       upper_tail_cor2(lambda),
      optimized_chernoff(spec, lambda), optimized_lemma1(spec, lambda * spec.mu()),
  };
  const BoundResult* best = &candidates[0];
  for (const auto& c : candidates) {
    if (c.log_value() < best->log_value()) best = &c;
  }
  return *best;
}

bool lemma_la_check(double A, double x) {
  if (!(A >= 1.0) || !std::isfinite(A) || !(x >= 0.0 && x <= 1.0 / A)) {
    throw Error(ErrorKind::DomainError, "lemma LA needs A >= 1 and 0 <= x <= 1/A");
  }
  const double left = A * numeric::x_plus_log1m(x);
  const double right = std::log1p(-A * x * x / 2.0);
  return left <= right + 8.0 * kEps * std::abs(right);
}

}  // namespace geotail
