#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace geotail {

/// Sum of independent geometric variables X_i ~ Ge(p_i) on {1, 2, ...}.
/// Derived statistics are computed once at construction.
class GeometricSumSpec {
 public:
  const std::vector<double>& params() const noexcept { return params_; }
  std::size_t size() const noexcept { return params_.size(); }
  double mu() const noexcept { return mu_; }
  double p_min() const noexcept { return p_min_; }
  double sigma2() const noexcept { return sigma2_; }
  /// ln(1 - p_min); -inf when p_min == 1.
  double log_q() const noexcept { return log_q_; }

 private:
  friend GeometricSumSpec make_geometric_spec(std::span<const double> p);
  GeometricSumSpec() = default;

  std::vector<double> params_;
  double mu_ = 0.0;
  double p_min_ = 1.0;
  double sigma2_ = 0.0;
  double log_q_ = 0.0;
};

/// Sum of independent exponential variables X_i ~ Exp(a_i) with mean 1/a_i.
class ExponentialSumSpec {
 public:
  const std::vector<double>& rates() const noexcept { return rates_; }
  std::size_t size() const noexcept { return rates_.size(); }
  double mu() const noexcept { return mu_; }
  double a_min() const noexcept { return a_min_; }

 private:
  friend ExponentialSumSpec make_exponential_spec(std::span<const double> a);
  ExponentialSumSpec() = default;

  std::vector<double> rates_;
  double mu_ = 0.0;
  double a_min_ = 0.0;
};

/// Throws Error(EmptyParams) or Error(OutOfRange) unless every p_i is in (0, 1].
GeometricSumSpec make_geometric_spec(std::span<const double> p);

/// Throws Error(EmptyParams) or Error(OutOfRange) unless every a_i is finite and > 0.
ExponentialSumSpec make_exponential_spec(std::span<const double> a);

enum class TailSide { Upper, Lower };

/// A tail query given either as a threshold x or as a ratio lambda = x / mu.
struct TailQuery {
  double x = 0.0;
  double lambda = 1.0;

  static TailQuery from_lambda(double lambda, double mu);
  static TailQuery from_threshold(double x, double mu);

  /// Throws Error(LambdaOutOfRange) unless lambda >= 1 (upper) or
  /// 0 < lambda <= 1 (lower).
  void require(TailSide side) const;
};

/// E z^X = prod p_i z / (1 - (1 - p_i) z). Requires z >= 0 and z (1 - p_min) < 1.
double pgf_geometric(const GeometricSumSpec& spec, double z);
double log_pgf_geometric(const GeometricSumSpec& spec, double z);

/// E e^{tX} = prod a_i / (a_i - t). Requires t < a_min.
double mgf_exponential(const ExponentialSumSpec& spec, double t);
double log_mgf_exponential(const ExponentialSumSpec& spec, double t);

/// Checks -ln(1 - x) <= -(x / y) ln(1 - y) for 0 < x <= y < 1.
bool log_inequality_check(double x, double y);

}  // namespace geotail
