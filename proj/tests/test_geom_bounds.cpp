#include <doctest.h>

#include <cmath>
#include <vector>

#include "geotail/error.hpp"
#include "geotail/exact_oracle.hpp"
#include "geotail/geom_bounds.hpp"
#include "test_support.hpp"

using namespace geotail;
using geotail::testing::for_all;
using geotail::testing::gen_probs;

namespace {

const auto kHalfHalf = make_geometric_spec(std::vector{0.5, 0.5});
constexpr double kLambdas[] = {1.0, 1.25, 1.5, 2.0, 3.0, 5.0};

// Independent reference: dense grid scan of the Chernoff exponent.
double chernoff_grid_min(const GeometricSumSpec& s, double lambda) {
  double best = 0.0;
  constexpr int kPoints = 200000;
  for (int i = 0; i < kPoints; ++i) {
    const double t = s.p_min() * i / kPoints;
    double g = -t * lambda * s.mu();
    for (double p : s.params()) g -= std::log1p(-t / p);
    best = std::min(best, g);
  }
  return best;
}

}  // namespace

TEST_CASE("Thm1 values") {
  const auto r = upper_tail_thm1(kHalfHalf, 2.0);
  CHECK_REL(r.value(), 0.54134113294645076758, 1e-14);
  CHECK(r.method == Method::Thm1);
  REQUIRE(r.internal_param);
  CHECK(*r.internal_param == doctest::Approx(0.25));
  CHECK(upper_tail_thm1(kHalfHalf, 1.0).value() == 1.0);
  // X == 1 exactly, yet the bound is still positive: p_min mu = 1 gives e^{-(1 - ln 2)}.
  CHECK_REL(upper_tail_thm1(make_geometric_spec(std::vector{1.0}), 2.0).value(),
            0.73575888234288464319, 1e-14);
  CHECK_THROWS_AS(upper_tail_thm1(kHalfHalf, 0.99), Error);
}

TEST_CASE("Cor1 and Cor2 values") {
  CHECK(upper_tail_cor1(1.0).value() == 1.0);
  CHECK_REL(upper_tail_cor1(2.0).value(), 0.73575888234288464319, 1e-14);
  CHECK_REL(upper_tail_cor1(5.0).value(), 0.091578194443670901469, 1e-14);
  CHECK(upper_tail_cor2(1.0).value() == 1.0);
  CHECK_REL(upper_tail_cor2(2.0).value(), 0.36787944117144233, 1e-14);
  CHECK_REL(upper_tail_cor2(3.0).value(), 0.1353352832366127, 1e-14);
  CHECK_THROWS_AS(upper_tail_cor1(0.5), Error);
  CHECK_THROWS_AS(upper_tail_cor2(0.5), Error);
}

TEST_CASE("Thm2 values and degenerate cases") {
  const auto r = upper_tail_thm2(kHalfHalf, 2.0);
  CHECK_REL(r.value(), 0.21354155096908690893, 1e-13);
  REQUIRE(r.internal_param);
  CHECK(*r.internal_param == doctest::Approx(1.5));
  const auto det = make_geometric_spec(std::vector{1.0, 1.0});
  CHECK(upper_tail_thm2(det, 2.0).value() == 0.0);
  CHECK(upper_tail_thm2(det, 1.0).value() == 1.0);
  CHECK(upper_tail_thm2(kHalfHalf, 1.0).value() == 1.0);
}

TEST_CASE("TL1 lower-tail values") {
  CHECK(lower_tail_tl1(kHalfHalf, 1.0).value() == 1.0);
  CHECK_REL(lower_tail_tl1(kHalfHalf, 0.5).value(), 0.67957045711476130884, 1e-14);
  CHECK(lower_tail_tl1(kHalfHalf, 1e-300).value() < 1e-100);
  CHECK_THROWS_AS(lower_tail_tl1(kHalfHalf, 0.0), Error);
  CHECK_THROWS_AS(lower_tail_tl1(kHalfHalf, 1.5), Error);
  const auto t = lower_tail_tl1(kHalfHalf, 0.5).internal_param;
  REQUIRE(t);
  CHECK(*t == doctest::Approx(0.5));
}

TEST_CASE("TL lower bound values") {
  CHECK_REL(upper_tail_lower_bound_tl(kHalfHalf, 2.0).value(), 0.001953125, 1e-14);
  CHECK_REL(upper_tail_lower_bound_tl(kHalfHalf, 1.0).value(), 0.03125, 1e-14);
  const auto one = make_geometric_spec(std::vector{1.0});
  CHECK(upper_tail_lower_bound_tl(one, 3.0).value() == 0.0);
  CHECK(upper_tail_lower_bound_tl(one, 1.0).value() == 0.0);
}

TEST_CASE("Lemma 1 bound values, clamping and domain") {
  CHECK(lemma1_bound(kHalfHalf, 5.0, 1.0).value() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_REL(lemma1_bound(kHalfHalf, 8.0, 1.5).value(), 0.17558299039780521262, 1e-13);
  CHECK_REL(lemma1_bound(make_geometric_spec(std::vector{0.5}), 4.0, 1.9).value(),
            0.14579384749963551538, 1e-12);

  const auto big = lemma1_bound(kHalfHalf, 0.0, 1.5);
  CHECK(big.clamped);
  CHECK(big.value() == 1.0);

  CHECK_THROWS_AS(lemma1_bound(kHalfHalf, 8.0, 0.9), Error);
  CHECK_THROWS_AS(lemma1_bound(kHalfHalf, 8.0, 2.0), Error);
  CHECK_THROWS_AS(lemma1_bound(kHalfHalf, -1.0, 1.2), Error);
}

TEST_CASE("optimized Chernoff") {
  const auto r = optimized_chernoff(kHalfHalf, 2.0);
  CHECK_REL(r.value(), 0.54134113294645076758, 1e-12);
  REQUIRE(r.internal_param);
  CHECK(std::abs(*r.internal_param - 0.25) < 1e-6);

  const auto at_one = optimized_chernoff(kHalfHalf, 1.0);
  CHECK(at_one.value() == 1.0);
  CHECK(*at_one.internal_param == 0.0);

  const auto mixed = make_geometric_spec(std::vector{0.5, 0.1});
  const auto m = optimized_chernoff(mixed, 2.0);
  CHECK(m.value() <= upper_tail_thm1(mixed, 2.0).value());
  // Agrees with a brute-force grid scan to grid resolution.
  const double grid = chernoff_grid_min(mixed, 2.0);
  CHECK(m.log_value() <= grid + 1e-12);
  CHECK(m.log_value() >= grid - 1e-6);
  CHECK(*m.internal_param >= 0.0);
  CHECK(*m.internal_param < mixed.p_min());
}

TEST_CASE("optimized Lemma 1") {
  const auto zero = optimized_lemma1(kHalfHalf, 0.0);
  CHECK(zero.value() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(*zero.internal_param == 1.0);

  const auto r = optimized_lemma1(kHalfHalf, 8.0);
  CHECK(r.value() <= 0.17558299039780521262);
  CHECK(r.value() >= 0.0625);
  REQUIRE(r.internal_param);
  CHECK(*r.internal_param >= 1.0);
  CHECK(*r.internal_param < 2.0);

  const auto det = make_geometric_spec(std::vector{1.0, 1.0});
  CHECK(optimized_lemma1(det, 2.0).value() == 1.0);
  CHECK(optimized_lemma1(det, 2.5).value() == 0.0);
}

TEST_CASE("best_upper picks the smallest bound") {
  const auto r = best_upper(kHalfHalf, 2.0);
  CHECK(r.value() <= 0.17558299039780521262);
  CHECK(r.method == Method::OptLemma1);
  CHECK(best_upper(kHalfHalf, 1.0).value() <= 1.0);
  const auto det = make_geometric_spec(std::vector{1.0, 1.0});
  const auto d = best_upper(det, 1.5);
  CHECK(d.value() == 0.0);
  CHECK(d.method == Method::Thm2);
}

TEST_CASE("dominance chain on random specs") {
  for_all(21, 300, [](CounterRng& r) { return gen_probs(r); }, [](const auto& p) {
    const auto s = make_geometric_spec(p);
    for (double lambda : kLambdas) {
      CAPTURE(lambda);
      const double thm1 = upper_tail_thm1(s, lambda).log_value();
      const double thm2 = upper_tail_thm2(s, lambda).log_value();
      const double cor1 = upper_tail_cor1(lambda).log_value();
      const double cor2 = upper_tail_cor2(lambda).log_value();
      const double opt = optimized_chernoff(s, lambda).log_value();
      CHECK(thm2 <= thm1 + 1e-12);
      CHECK(thm1 <= cor1 + 1e-12);
      CHECK(thm2 <= cor2 + 1e-12);
      CHECK(cor2 <= cor1 + 1e-12);
      CHECK(opt <= thm1 + 1e-12);
      if (s.p_min() < 1.0) {
        const double z = lemma1_reference_z(s, lambda);
        CHECK(lemma1_bound(s, lambda * s.mu(), z).log_value() <= thm2 + 1e-12);
      }
      CHECK(best_upper(s, lambda).log_value() <= thm2 + 1e-12);
    }
  });
}

TEST_CASE("optimized Chernoff equals Thm1 when all p are equal") {
  for_all(22, 100, [](CounterRng& r) {
    const int n = 1 + static_cast<int>(r.next() % 10);
    return std::vector<double>(static_cast<std::size_t>(n), testing::uniform(r, 0.02, 0.98));
  }, [](const auto& p) {
    const auto s = make_geometric_spec(p);
    for (double lambda : kLambdas) {
      CHECK_REL(optimized_chernoff(s, lambda).value(), upper_tail_thm1(s, lambda).value(), 1e-9);
    }
  });
}

TEST_CASE("bounds are non-increasing in lambda") {
  for_all(23, 60, [](CounterRng& r) { return gen_probs(r); }, [](const auto& p) {
    const auto s = make_geometric_spec(p);
    double prev[7];
    std::fill(std::begin(prev), std::end(prev), 1.0);
    for (int i = 0; i <= 40; ++i) {
      const double lambda = 1.0 + 0.1 * i;
      const double cur[7] = {
          upper_tail_thm1(s, lambda).value(),   upper_tail_thm2(s, lambda).value(),
          upper_tail_cor1(lambda).value(),      upper_tail_cor2(lambda).value(),
          optimized_chernoff(s, lambda).value(), optimized_lemma1(s, lambda * s.mu()).value(),
          upper_tail_lower_bound_tl(s, lambda).value(),
      };
      for (int k = 0; k < 7; ++k) {
        CAPTURE(k);
        CAPTURE(lambda);
        CHECK(cur[k] <= prev[k] * (1.0 + 1e-9));
        prev[k] = cur[k];
      }
    }
  });
}

TEST_CASE("lemma_la_check") {
  CHECK(lemma_la_check(3.0, 0.0));
  CHECK(lemma_la_check(1.0, 1.0));
  CHECK(lemma_la_check(4.0, 0.2));
  CHECK_THROWS_AS(lemma_la_check(0.5, 0.1), Error);
  CHECK_THROWS_AS(lemma_la_check(4.0, 0.3), Error);
  CHECK_THROWS_AS(lemma_la_check(4.0, -0.1), Error);

  int violations = 0;
  for (int i = 0; i < 200; ++i) {
    const double A = 1.0 + 0.5 * i;
    for (int j = 0; j <= 200; ++j) {
      const double x = j == 200 ? 1.0 / A : (1.0 / A) * j / 200.0;
      if (!lemma_la_check(A, x)) ++violations;
    }
  }
  CHECK(violations == 0);
}
