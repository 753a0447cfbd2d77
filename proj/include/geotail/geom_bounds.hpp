#pragma once

#include "geotail/bound_result.hpp"
#include "geotail/model.hpp"

namespace geotail {

// Upper bounds on P(X >= lambda * mu), lambda >= 1.

/// exp(-p_min mu (lambda - 1 - ln lambda)), with t = (1 - 1/lambda) p_min.
BoundResult upper_tail_thm1(const GeometricSumSpec& spec, double lambda);

/// lambda e^{1 - lambda}; independent of the p_i.
BoundResult upper_tail_cor1(double lambda);

/// lambda^{-1} (1 - p_min)^{(lambda - 1 - ln lambda) mu}.
BoundResult upper_tail_thm2(const GeometricSumSpec& spec, double lambda);

/// e^{1 - lambda}.
BoundResult upper_tail_cor2(double lambda);

/// Upper bound on the lower tail P(X <= lambda * mu) for 0 < lambda <= 1.
BoundResult lower_tail_tl1(const GeometricSumSpec& spec, double lambda);

/// Lower bound on P(X >= lambda * mu):
/// (1 - p_min)^{1 + 1/p_min} / (2 p_min mu) * (1 - p_min)^{(lambda - 1) mu}.
/// Degenerates to 0 when p_min == 1.
BoundResult upper_tail_lower_bound_tl(const GeometricSumSpec& spec, double lambda);

/// (1 - z(1 - p_min)) / p_min * z^{-x} E z^X for x >= 0 and 1 <= z < 1/(1 - p_min).
BoundResult lemma1_bound(const GeometricSumSpec& spec, double x, double z);

/// The z that turns lemma1_bound into the closed-form argument behind
/// upper_tail_thm2: (lambda - p_min) / (lambda (1 - p_min)).
double lemma1_reference_z(const GeometricSumSpec& spec, double lambda);

/// Minimises -t lambda mu - sum ln(1 - t / p_i) over t in [0, p_min).
BoundResult optimized_chernoff(const GeometricSumSpec& spec, double lambda);

/// Minimises lemma1_bound over z for the threshold x.
BoundResult optimized_lemma1(const GeometricSumSpec& spec, double x);

/// Smallest of Thm1, Thm2, Cor1, Cor2, OptChernoff and OptLemma1.
BoundResult best_upper(const GeometricSumSpec& spec, double lambda);

/// Checks A (x + ln(1 - x)) <= ln(1 - A x^2 / 2) for A >= 1, 0 <= x <= 1/A.
bool lemma_la_check(double A, double x);

}  // namespace geotail
