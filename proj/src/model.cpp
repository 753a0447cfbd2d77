#include "geotail/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "geotail/error.hpp"
#include "geotail/numeric.hpp"

namespace geotail {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

std::string describe(std::size_t i, double v) {
  return "parameter #" + std::to_string(i + 1) + " = " + std::to_string(v);
}

}  // namespace

GeometricSumSpec make_geometric_spec(std::span<const double> p) {
  if (p.empty()) throw Error(ErrorKind::EmptyParams, "no success probabilities given");
  GeometricSumSpec spec;
  spec.params_.assign(p.begin(), p.end());
  numeric::CompensatedSum mu, var;
  double p_min = 1.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double pi = p[i];
    if (!(pi > 0.0 && pi <= 1.0)) {
      throw Error(ErrorKind::OutOfRange, describe(i, pi) + " is outside (0, 1]");
    }
    mu.add(1.0 / pi);
    var.add((1.0 - pi) / (pi * pi));
    p_min = std::min(p_min, pi);
  }
  spec.mu_ = mu.value();
  spec.sigma2_ = var.value();
  spec.p_min_ = p_min;
  spec.log_q_ = std::log1p(-p_min);
  return spec;
}

ExponentialSumSpec make_exponential_spec(std::span<const double> a) {
  if (a.empty()) throw Error(ErrorKind::EmptyParams, "no rates given");
  ExponentialSumSpec spec;
  spec.rates_.assign(a.begin(), a.end());
  numeric::CompensatedSum mu;
  double a_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] > 0.0) || !std::isfinite(a[i])) {
      throw Error(ErrorKind::OutOfRange, describe(i, a[i]) + " is not a positive rate");
    }
    mu.add(1.0 / a[i]);
    a_min = std::min(a_min, a[i]);
  }
  spec.mu_ = mu.value();
  spec.a_min_ = a_min;
  return spec;
}

TailQuery TailQuery::from_lambda(double lambda, double mu) {
  if (!std::isfinite(lambda)) throw Error(ErrorKind::LambdaOutOfRange, "lambda must be finite");
  return TailQuery{lambda * mu, lambda};
}

TailQuery TailQuery::from_threshold(double x, double mu) {
  if (!std::isfinite(x)) throw Error(ErrorKind::DomainError, "threshold must be finite");
  return TailQuery{x, x / mu};
}

void TailQuery::require(TailSide side) const {
  if (side == TailSide::Upper && !(lambda >= 1.0)) {
    throw Error(ErrorKind::LambdaOutOfRange,
                "upper-tail bounds need lambda >= 1 (x >= mu), got lambda = " +
                    std::to_string(lambda));
  }
  if (side == TailSide::Lower && !(lambda > 0.0 && lambda <= 1.0)) {
    throw Error(ErrorKind::LambdaOutOfRange,
                "lower-tail bounds need 0 < lambda <= 1, got lambda = " + std::to_string(lambda));
  }
}

double log_pgf_geometric(const GeometricSumSpec& spec, double z) {
  if (!(z >= 0.0) || !std::isfinite(z) || z * (1.0 - spec.p_min()) >= 1.0) {
    throw Error(ErrorKind::DomainError,
                "pgf argument z = " + std::to_string(z) + " outside [0, 1/(1-p_min))");
  }
  if (z == 0.0) return -numeric::kInf;
  numeric::CompensatedSum acc;
  const double log_z = std::log(z);
  for (double p : spec.params()) {
    acc.add(std::log(p) + log_z - std::log1p(-(1.0 - p) * z));
  }
  return acc.value();
}

double pgf_geometric(const GeometricSumSpec& spec, double z) {
  return std::exp(log_pgf_geometric(spec, z));
}

double log_mgf_exponential(const ExponentialSumSpec& spec, double t) {
  if (!(t < spec.a_min())) {
    throw Error(ErrorKind::DomainError,
                "mgf argument t = " + std::to_string(t) + " is not below a_min");
  }
  if (t == 0.0) return 0.0;
  numeric::CompensatedSum acc;
  for (double a : spec.rates()) acc.add(-std::log1p(-t / a));
  return acc.value();
}

double mgf_exponential(const ExponentialSumSpec& spec, double t) {
  return std::exp(log_mgf_exponential(spec, t));
}

bool log_inequality_check(double x, double y) {
  if (!(x > 0.0 && x <= y && y < 1.0)) {
    throw Error(ErrorKind::DomainError, "log inequality needs 0 < x <= y < 1");
  }
  const double lhs = -std::log1p(-x);
  const double rhs = -(x / y) * std::log1p(-y);
  return lhs <= rhs * (1.0 + 4.0 * kEps);
}

}  // namespace geotail
