#pragma once

#include <optional>
#include <string_view>

#include "geotail/log_prob.hpp"

namespace geotail {

enum class Method {
  Thm1,
  Thm2,
  Cor1,
  Cor2,
  TL1,
  TL,
  Lemma1,
  OptChernoff,
  OptLemma1,
  TexpI,
  TexpII,
  TexpIII,
  TexpIV,
};

std::string_view to_string(Method m) noexcept;

/// Which way a bound points relative to the probability it describes.
enum class BoundKind { UpperTailUpper, LowerTailUpper, UpperTailLower };

BoundKind kind_of(Method m) noexcept;

struct BoundResult {
  LogProb log_bound;
  Method method = Method::Thm1;
  /// t for Chernoff-type methods, z for generating-function methods.
  std::optional<double> internal_param;
  double lambda = 1.0;
  /// Set when the raw bound exceeded 1 and was reported as 1.
  bool clamped = false;

  double value() const noexcept { return log_bound.value(); }
  double log_value() const noexcept { return log_bound.log_value(); }
};

/// Builds a result from a raw log-bound, clamping values above 0.
BoundResult make_bound(Method method, double raw_log, double lambda,
                       std::optional<double> internal_param = std::nullopt);

}  // namespace geotail
