#include "geotail/exact_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "geotail/error.hpp"
#include "geotail/geom_bounds.hpp"
#include "geotail/numeric.hpp"

namespace geotail {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kComplementSwitch = 1e-9;
constexpr double kRateGap = 1e-6;

/// Steps the convolution recursion one support point at a time. The state
/// holds c_i(k) * exp(-log_scale) for i = 0..n.
class PmfStepper {
 public:
  explicit PmfStepper(const GeometricSumSpec& spec) : p_(spec.params()), c_(p_.size() + 1, 0.0) {
    c_[0] = 1.0;
  }

  std::int64_t k() const noexcept { return k_; }

  /// Advances to k + 1 and returns ln P(X = k + 1).
  double step() {
    for (std::size_t i = p_.size(); i >= 1; --i) {
      c_[i] = (1.0 - p_[i - 1]) * c_[i] + p_[i - 1] * c_[i - 1];
    }
    c_[0] = 0.0;
    ++k_;
    const double peak = *std::max_element(c_.begin(), c_.end());
    if (peak > 0.0 && peak < 1e-200) {
      for (double& v : c_) v *= 1e200;
      log_scale_ -= 200.0 * std::log(10.0);
    }
    const double top = c_.back();
    return top > 0.0 ? std::log(top) + log_scale_ : -numeric::kInf;
  }

  /// P(X = k) without the log round trip; underflows to 0 once rescaled.
  double linear() const noexcept {
    return log_scale_ == 0.0 ? c_.back() : std::exp(log_scale_) * c_.back();
  }

 private:
  const std::vector<double>& p_;
  std::vector<double> c_;
  double log_scale_ = 0.0;
  std::int64_t k_ = 0;
};

std::int64_t ceil_to_int(double x) {
  if (!std::isfinite(x) || std::abs(x) > 9e15) {
    throw Error(ErrorKind::DomainError, "threshold " + std::to_string(x) + " is not representable");
  }
  return static_cast<std::int64_t>(std::ceil(x));
}

}  // namespace

std::string_view to_string(EstimateMethod m) noexcept {
  switch (m) {
    case EstimateMethod::Convolution: return "convolution";
    case EstimateMethod::PartialFractions: return "partial-fractions";
    case EstimateMethod::MatrixExp: return "matrix-exp";
    case EstimateMethod::ClosedForm: return "closed-form";
    case EstimateMethod::MonteCarlo: return "monte-carlo";
  }
  return "unknown";
}

TailEstimate make_estimate(double value, double log_value, double error_bound,
                           EstimateMethod method) {
  TailEstimate e;
  e.value = std::clamp(value, 0.0, 1.0);
  e.log_value = std::min(log_value, 0.0);
  e.error_bound = std::max(error_bound, 0.0);
  e.method = method;
  e.interval_low = std::max(0.0, e.value - e.error_bound);
  e.interval_high = std::min(1.0, e.value + e.error_bound);
  return e;
}

std::vector<double> geom_log_pmf(const GeometricSumSpec& spec, std::int64_t K) {
  const auto n = static_cast<std::int64_t>(spec.size());
  if (K < n) {
    throw Error(ErrorKind::KTooSmall,
                "K = " + std::to_string(K) + " is below the support minimum " + std::to_string(n));
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(K - n + 1));
  PmfStepper stepper(spec);
  while (stepper.k() < K) {
    const double lp = stepper.step();
    if (stepper.k() >= n) out.push_back(lp);
  }
  return out;
}

std::vector<double> geom_pmf_convolution(const GeometricSumSpec& spec, std::int64_t K) {
  const auto n = static_cast<std::int64_t>(spec.size());
  if (K < n) {
    throw Error(ErrorKind::KTooSmall,
                "K = " + std::to_string(K) + " is below the support minimum " + std::to_string(n));
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(K - n + 1));
  PmfStepper stepper(spec);
  while (stepper.k() < K) {
    stepper.step();
    if (stepper.k() >= n) out.push_back(stepper.linear());
  }
  return out;
}

TailEstimate geom_tail_exact(const GeometricSumSpec& spec, double x, double rel_tol) {
  if (!(rel_tol > 0.0 && rel_tol <= 0.1)) {
    throw Error(ErrorKind::OutOfRange, "rel_tol must lie in (0, 0.1]");
  }
  const auto n = static_cast<std::int64_t>(spec.size());
  const std::int64_t k0 = std::max(ceil_to_int(x), n);
  if (k0 <= n) return make_estimate(1.0, 0.0, 0.0, EstimateMethod::Convolution);

  PmfStepper stepper(spec);
  numeric::CompensatedSum cdf;
  while (stepper.k() < k0 - 1) {
    stepper.step();
    if (stepper.k() >= n) cdf.add(stepper.linear());
  }
  const double complement = 1.0 - cdf.value();
  if (complement > kComplementSwitch) {
    const double err = (2.0 * static_cast<double>(k0) + 4.0 * static_cast<double>(n) + 8.0) * kEps;
    return make_estimate(complement, std::log(complement), err, EstimateMethod::Convolution);
  }

  // Direct summation from k0 upward in log space.
  const double log_rel = std::log(rel_tol);
  double log_sum = -numeric::kInf;
  double log_rest = 0.0;
  for (;;) {
    log_sum = numeric::log_add(log_sum, stepper.step());
    const double lambda_next = static_cast<double>(stepper.k() + 1) / spec.mu();
    log_rest = lambda_next >= 1.0 ? upper_tail_thm2(spec, lambda_next).log_value() : 0.0;
    if (log_rest == -numeric::kInf || log_rest < log_rel + log_sum) break;
  }
  const double value = std::exp(log_sum);
  const double roundoff = value * (2.0 * static_cast<double>(stepper.k()) + 8.0) * kEps;
  return make_estimate(value, log_sum, std::exp(log_rest) + roundoff, EstimateMethod::Convolution);
}

TailEstimate geom_lower_tail_exact(const GeometricSumSpec& spec, double x) {
  const auto n = static_cast<std::int64_t>(spec.size());
  if (!std::isfinite(x) || std::abs(x) > 9e15) {
    throw Error(ErrorKind::DomainError, "threshold " + std::to_string(x) + " is not representable");
  }
  const auto k_hi = static_cast<std::int64_t>(std::floor(x));
  if (k_hi < n) return make_estimate(0.0, -numeric::kInf, 0.0, EstimateMethod::Convolution);
  PmfStepper stepper(spec);
  double log_sum = -numeric::kInf;
  while (stepper.k() < k_hi) {
    const double lp = stepper.step();
    if (stepper.k() >= n) log_sum = numeric::log_add(log_sum, lp);
  }
  const double value = std::exp(log_sum);
  const double err = value * (2.0 * static_cast<double>(k_hi) + 8.0) * kEps;
  return make_estimate(value, log_sum, err, EstimateMethod::Convolution);
}

TailEstimate iid_geom_tail(double p, std::int64_t n, double x) {
  if (!(p > 0.0 && p <= 1.0)) throw Error(ErrorKind::OutOfRange, "p must lie in (0, 1]");
  if (n < 1) throw Error(ErrorKind::OutOfRange, "n must be at least 1");
  const std::int64_t k0 = ceil_to_int(x);
  if (k0 <= n) return make_estimate(1.0, 0.0, 0.0, EstimateMethod::ClosedForm);
  if (p == 1.0) return make_estimate(0.0, -numeric::kInf, 0.0, EstimateMethod::ClosedForm);

  // Fewer than n successes among the first k0 - 1 trials.
  const double trials = static_cast<double>(k0 - 1);
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  const double lg_trials = std::lgamma(trials + 1.0);
  double log_sum = -numeric::kInf;
  double magnitude = 0.0;
  for (std::int64_t j = 0; j < n; ++j) {
    const double jj = static_cast<double>(j);
    const double log_binom = lg_trials - std::lgamma(jj + 1.0) - std::lgamma(trials - jj + 1.0);
    const double term = log_binom + jj * log_p + (trials - jj) * log_q;
    log_sum = numeric::log_add(log_sum, term);
    magnitude = std::max(magnitude, std::abs(lg_trials) + std::abs(jj * log_p) +
                                        std::abs((trials - jj) * log_q));
  }
  const double value = std::exp(log_sum);
  const double err = value * 8.0 * kEps * (magnitude + static_cast<double>(n) + 1.0);
  return make_estimate(value, log_sum, err, EstimateMethod::ClosedForm);
}

bool rates_well_separated(const ExponentialSumSpec& spec) {
  const auto& a = spec.rates();
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (!(std::abs(a[i] - a[j]) > kRateGap * std::max(a[i], a[j]))) return false;
    }
  }
  return true;
}

namespace {

void require_nonnegative(double x) {
  if (!(x >= 0.0)) throw Error(ErrorKind::NegativeX, "survival needs x >= 0");
  if (!std::isfinite(x)) throw Error(ErrorKind::DomainError, "survival needs a finite x");
}

/// Row-major dense square matrix, just enough for scaling and squaring.
class Dense {
 public:
  explicit Dense(std::size_t n) : n_(n), v_(n * n, 0.0) {}
  static Dense identity(std::size_t n) {
    Dense m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }
  double& operator()(std::size_t i, std::size_t j) { return v_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return v_[i * n_ + j]; }
  std::size_t size() const { return n_; }

  Dense operator*(const Dense& o) const {
    Dense r(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t k = 0; k < n_; ++k) {
        const double a = (*this)(i, k);
        if (a == 0.0) continue;
        for (std::size_t j = 0; j < n_; ++j) r(i, j) += a * o(k, j);
      }
    }
    return r;
  }

  double norm1() const {
    double best = 0.0;
    for (std::size_t j = 0; j < n_; ++j) {
      double col = 0.0;
      for (std::size_t i = 0; i < n_; ++i) col += std::abs((*this)(i, j));
      best = std::max(best, col);
    }
    return best;
  }

 private:
  std::size_t n_;
  std::vector<double> v_;
};

}  // namespace

TailEstimate hypoexp_survival_partial_fractions(const ExponentialSumSpec& spec, double x) {
  require_nonnegative(x);
  if (!rates_well_separated(spec)) {
    throw Error(ErrorKind::DomainError, "partial fractions need pairwise distinct rates");
  }
  const auto& a = spec.rates();
  const std::size_t n = a.size();
  numeric::CompensatedSum sum;
  double magnitude = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double coef = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) coef *= a[j] / (a[j] - a[i]);
    }
    const double term = coef * std::exp(-a[i] * x);
    sum.add(term);
    magnitude += std::abs(term);
  }
  const double raw = sum.value();
  const double err = (2.0 * static_cast<double>(n) + 4.0) * kEps * magnitude;
  const double value = std::clamp(raw, 0.0, 1.0);
  return make_estimate(value, value > 0.0 ? std::log(value) : -numeric::kInf, err,
                       EstimateMethod::PartialFractions);
}

TailEstimate hypoexp_survival_matrix_exp(const ExponentialSumSpec& spec, double x) {
  require_nonnegative(x);
  const auto& a = spec.rates();
  const std::size_t n = a.size();
  Dense gen(n);
  for (std::size_t i = 0; i < n; ++i) {
    gen(i, i) = -a[i] * x;
    if (i + 1 < n) gen(i, i + 1) = a[i] * x;
  }
  const double norm = gen.norm1();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const double scale = std::ldexp(1.0, -squarings);
  Dense scaled(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) scaled(i, j) = gen(i, j) * scale;
  }

  // Degree-13 Taylor polynomial by Horner's rule.
  constexpr int kDegree = 13;
  Dense result = Dense::identity(n);
  for (int k = kDegree; k >= 1; --k) {
    result = scaled * result;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) result(i, j) /= k;
      result(i, i) += 1.0;
    }
  }
  for (int s = 0; s < squarings; ++s) result = result * result;

  numeric::CompensatedSum row;
  for (std::size_t j = 0; j < n; ++j) row.add(result(0, j));
  const double value = std::clamp(row.value(), 0.0, 1.0);

  // Taylor remainder for ||B|| <= 0.5, amplified by the squarings.
  const double theta = scale * norm;
  const double remainder = 2.0 * std::pow(theta, kDegree + 1) / std::tgamma(kDegree + 2.0);
  const double err =
      std::ldexp(remainder + 8.0 * static_cast<double>(n) * kEps, squarings) + 4.0 * n * kEps;
  return make_estimate(value, value > 0.0 ? std::log(value) : -numeric::kInf, err,
                       EstimateMethod::MatrixExp);
}

TailEstimate hypoexp_survival(const ExponentialSumSpec& spec, double x) {
  require_nonnegative(x);
  if (x == 0.0) return make_estimate(1.0, 0.0, 0.0, EstimateMethod::ClosedForm);
  if (rates_well_separated(spec)) return hypoexp_survival_partial_fractions(spec, x);
  return hypoexp_survival_matrix_exp(spec, x);
}

TailEstimate hypoexp_cdf(const ExponentialSumSpec& spec, double x) {
  const auto s = hypoexp_survival(spec, x);
  const double value = 1.0 - s.value;
  return make_estimate(value, value > 0.0 ? std::log(value) : -numeric::kInf,
                       s.error_bound + kEps, s.method);
}

}  // namespace geotail
