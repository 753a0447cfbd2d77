#include "geotail/exp_bounds.hpp"

#include <cmath>

#include "geotail/numeric.hpp"

namespace geotail {

BoundResult exp_upper_i(const ExponentialSumSpec& spec, double lambda) {
  TailQuery{0.0, lambda}.require(TailSide::Upper);
  const double am = spec.a_min() * spec.mu();
  return make_bound(Method::TexpI, -std::log(lambda) - am * numeric::lambda_exponent(lambda),
                    lambda);
}

BoundResult exp_upper_ii(double lambda) {
  TailQuery{0.0, lambda}.require(TailSide::Upper);
  return make_bound(Method::TexpII, 1.0 - lambda, lambda);
}

BoundResult exp_lower_tail_iii(const ExponentialSumSpec& spec, double lambda) {
  TailQuery{0.0, lambda}.require(TailSide::Lower);
  const double am = spec.a_min() * spec.mu();
  return make_bound(Method::TexpIII, -am * numeric::lambda_exponent(lambda), lambda);
}

BoundResult exp_tail_lower_iv(const ExponentialSumSpec& spec, double lambda) {
  TailQuery{0.0, lambda}.require(TailSide::Upper);
  const double am = spec.a_min() * spec.mu();
  return make_bound(Method::TexpIV, -1.0 - std::log(2.0 * am) - am * (lambda - 1.0), lambda);
}

}  // namespace geotail
