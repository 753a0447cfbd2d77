#pragma once

#include "geotail/bound_result.hpp"
#include "geotail/model.hpp"

namespace geotail {

/// P(X >= lambda mu) <= lambda^{-1} e^{-a_min mu (lambda - 1 - ln lambda)}, lambda >= 1.
BoundResult exp_upper_i(const ExponentialSumSpec& spec, double lambda);

/// P(X >= lambda mu) <= e^{1 - lambda}, lambda >= 1.
BoundResult exp_upper_ii(double lambda);

/// P(X <= lambda mu) <= e^{-a_min mu (lambda - 1 - ln lambda)}, 0 < lambda <= 1.
BoundResult exp_lower_tail_iii(const ExponentialSumSpec& spec, double lambda);

/// P(X >= lambda mu) >= e^{-a_min mu (lambda - 1)} / (2 e a_min mu), lambda >= 1.
BoundResult exp_tail_lower_iv(const ExponentialSumSpec& spec, double lambda);

}  // namespace geotail
