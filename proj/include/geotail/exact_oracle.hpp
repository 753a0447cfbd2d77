#pragma once

#include <cstdint>
#include <vector>

#include "geotail/model.hpp"
#include "geotail/tail_estimate.hpp"

namespace geotail {

/// P(X = k) for k = n..K by the recursion
///   c_i(k) = (1 - p_i) c_i(k - 1) + p_i c_{i-1}(k - 1),
/// O(nK) work. Throws Error(KTooSmall) when K < n.
std::vector<double> geom_pmf_convolution(const GeometricSumSpec& spec, std::int64_t K);

/// Same recursion in log space: ln P(X = k) for k = n..K. Entries stay
/// finite where the linear pmf underflows.
std::vector<double> geom_log_pmf(const GeometricSumSpec& spec, std::int64_t K);

/// P(X >= x). Shallow tails come from the complement of the cdf; once that
/// falls below 1e-9 the tail is summed directly and truncated when the
/// remaining mass, certified by upper_tail_thm2, is below rel_tol times the
/// partial sum.
TailEstimate geom_tail_exact(const GeometricSumSpec& spec, double x, double rel_tol = 1e-12);

/// P(X <= x) summed from the left, no cancellation.
TailEstimate geom_lower_tail_exact(const GeometricSumSpec& spec, double x);

/// P(X >= x) for X a sum of n iid Ge(p) variables, through the identity
/// P(X >= k) = P(Bin(k - 1, p) <= n - 1): a finite sum of n terms.
TailEstimate iid_geom_tail(double p, std::int64_t n, double x);

/// P(X > x) for a hypoexponential sum. Uses partial fractions when every
/// pair of rates is separated by more than 1e-6 (relative), otherwise the
/// matrix exponential of the bidiagonal generator.
TailEstimate hypoexp_survival(const ExponentialSumSpec& spec, double x);

/// The two routes behind hypoexp_survival, exposed for cross-checking.
/// The partial-fraction route throws Error(DomainError) for near-equal rates.
TailEstimate hypoexp_survival_partial_fractions(const ExponentialSumSpec& spec, double x);
TailEstimate hypoexp_survival_matrix_exp(const ExponentialSumSpec& spec, double x);

/// True when the partial-fraction route is numerically admissible.
bool rates_well_separated(const ExponentialSumSpec& spec);

/// P(X <= x) = 1 - hypoexp_survival.
TailEstimate hypoexp_cdf(const ExponentialSumSpec& spec, double x);

}  // namespace geotail
