#pragma once

#include <cstdint>

#include "geotail/model.hpp"
#include "geotail/rng.hpp"
#include "geotail/tail_estimate.hpp"

namespace geotail {

struct McConfig {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  double confidence = 0.99;
  /// Worker threads; 0 picks the hardware concurrency. Never affects results.
  unsigned workers = 0;

  /// Throws Error(InvalidConfig) when samples == 0 or confidence is outside (0, 1).
  void validate() const;
};

/// One draw of X, each X_i by inversion ceil(ln U / ln(1 - p_i)).
std::int64_t sample_geometric_sum(const GeometricSumSpec& spec, CounterRng& rng);

/// One draw of X = sum -ln(U_i) / a_i.
double sample_exponential_sum(const ExponentialSumSpec& spec, CounterRng& rng);

/// Fraction of draws with X >= x (upper) or X <= x (lower). error_bound is the
/// Wilson half-width at cfg.confidence; the Wilson interval itself is in
/// interval_low / interval_high.
TailEstimate mc_tail(const GeometricSumSpec& spec, double x, const McConfig& cfg,
                     TailSide side = TailSide::Upper);
TailEstimate mc_tail(const ExponentialSumSpec& spec, double x, const McConfig& cfg,
                     TailSide side = TailSide::Upper);

struct WilsonInterval {
  double low = 0.0;
  double high = 0.0;
  double half_width = 0.0;
};

WilsonInterval wilson_interval(std::uint64_t hits, std::uint64_t trials, double confidence);

}  // namespace geotail
