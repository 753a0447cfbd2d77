#pragma once

#include <string_view>

namespace geotail {

enum class EstimateMethod { Convolution, PartialFractions, MatrixExp, ClosedForm, MonteCarlo };

std::string_view to_string(EstimateMethod m) noexcept;

/// A tail probability from an exact oracle (rigorous error_bound) or from
/// Monte Carlo (error_bound is the confidence-interval half-width).
struct TailEstimate {
  double value = 0.0;
  double error_bound = 0.0;
  EstimateMethod method = EstimateMethod::Convolution;
  /// ln(value); stays finite where value underflows.
  double log_value = 0.0;
  /// Interval reported alongside the value, clipped to [0, 1]. For Monte
  /// Carlo this is the Wilson interval, which is not centred on value.
  double interval_low = 0.0;
  double interval_high = 0.0;
};

/// Fills log_value and a value +- error_bound interval clipped to [0, 1].
TailEstimate make_estimate(double value, double log_value, double error_bound,
                           EstimateMethod method);

}  // namespace geotail
