#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "geotail/error.hpp"
#include "geotail/model.hpp"
#include "test_support.hpp"

using namespace geotail;
using geotail::testing::for_all;
using geotail::testing::gen_probs;
using geotail::testing::gen_rates;

namespace {

ErrorKind kind_of_throw(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::DomainError;
}

}  // namespace

TEST_CASE("make_geometric_spec derives mu, p_min and sigma2") {
  const auto a = make_geometric_spec(std::vector{0.5, 0.5});
  CHECK(a.mu() == 4.0);
  CHECK(a.p_min() == 0.5);
  CHECK(a.sigma2() == 4.0);

  const auto b = make_geometric_spec(std::vector{1.0});
  CHECK(b.mu() == 1.0);
  CHECK(b.p_min() == 1.0);
  CHECK(b.sigma2() == 0.0);
  CHECK(b.log_q() == -std::numeric_limits<double>::infinity());

  const auto c = make_geometric_spec(std::vector{0.5, 0.2, 0.1});
  CHECK_REL(c.mu(), 17.0, 1e-15);
  CHECK(c.p_min() == 0.1);
  CHECK_REL(c.sigma2(), 112.0, 1e-14);
}

TEST_CASE("make_geometric_spec rejects bad input") {
  CHECK(kind_of_throw([] { make_geometric_spec(std::vector<double>{}); }) ==
        ErrorKind::EmptyParams);
  CHECK(kind_of_throw([] { make_geometric_spec(std::vector{0.5, 0.0}); }) ==
        ErrorKind::OutOfRange);
  CHECK(kind_of_throw([] { make_geometric_spec(std::vector{1.5}); }) == ErrorKind::OutOfRange);
  CHECK(kind_of_throw([] { make_geometric_spec(std::vector{std::nan("")}); }) ==
        ErrorKind::OutOfRange);
}

TEST_CASE("make_exponential_spec") {
  const auto a = make_exponential_spec(std::vector{1.0, 2.0});
  CHECK(a.mu() == 1.5);
  CHECK(a.a_min() == 1.0);
  CHECK(make_exponential_spec(std::vector{1.0}).mu() == 1.0);
  CHECK(make_exponential_spec(std::vector{1.0, 1.0}).mu() == 2.0);
  CHECK(kind_of_throw([] { make_exponential_spec(std::vector<double>{}); }) ==
        ErrorKind::EmptyParams);
  CHECK(kind_of_throw([] { make_exponential_spec(std::vector{1.0, -2.0}); }) ==
        ErrorKind::OutOfRange);
}

TEST_CASE("geometric spec invariants hold on random parameter lists") {
  for_all(11, 500, [](CounterRng& r) { return gen_probs(r, 30, 1e-4); }, [](const auto& p) {
    const auto s = make_geometric_spec(p);
    const double n = static_cast<double>(p.size());
    bool all_one = true;
    for (double v : p) all_one = all_one && v == 1.0;
    CHECK(s.mu() >= n);
    CHECK((s.mu() == n) == all_one);
    CHECK(s.p_min() > 0.0);
    CHECK(s.p_min() * s.mu() >= 1.0 - 4 * std::numeric_limits<double>::epsilon());
    CHECK(s.sigma2() >= 0.0);
    CHECK((s.sigma2() == 0.0) == all_one);
  });
}

TEST_CASE("TailQuery converts between x and lambda and checks the side") {
  const auto q = TailQuery::from_threshold(8.0, 4.0);
  CHECK(q.lambda == 2.0);
  CHECK(TailQuery::from_lambda(2.0, 4.0).x == 8.0);
  CHECK_NOTHROW(q.require(TailSide::Upper));
  CHECK_THROWS_AS(q.require(TailSide::Lower), Error);
  const auto low = TailQuery::from_lambda(0.5, 4.0);
  CHECK_NOTHROW(low.require(TailSide::Lower));
  CHECK_THROWS_AS(low.require(TailSide::Upper), Error);
  CHECK_THROWS_AS(TailQuery::from_lambda(0.0, 4.0).require(TailSide::Lower), Error);
}

TEST_CASE("pgf_geometric examples and domain") {
  const auto one = make_geometric_spec(std::vector{0.5});
  const auto two = make_geometric_spec(std::vector{0.5, 0.5});
  CHECK(pgf_geometric(one, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(pgf_geometric(one, 1.5) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(pgf_geometric(two, 1.5) == doctest::Approx(9.0).epsilon(1e-14));
  CHECK(pgf_geometric(two, 0.0) == 0.0);
  CHECK_THROWS_AS(pgf_geometric(one, 2.0), Error);
  CHECK_THROWS_AS(pgf_geometric(one, -0.1), Error);
  // p_min = 1: every z >= 0 is admissible, E z^X = z^n.
  const auto det = make_geometric_spec(std::vector{1.0, 1.0});
  CHECK(pgf_geometric(det, 7.0) == doctest::Approx(49.0).epsilon(1e-14));
}

TEST_CASE("pgf is 1 at z=1 and its derivative there is mu") {
  for_all(12, 200, [](CounterRng& r) { return gen_probs(r); }, [](const auto& p) {
    const auto s = make_geometric_spec(p);
    CHECK(std::abs(pgf_geometric(s, 1.0) - 1.0) <= 1e-12);
    const double h = 1e-6;
    const double deriv = (pgf_geometric(s, 1.0 + h) - pgf_geometric(s, 1.0 - h)) / (2 * h);
    CHECK_REL(deriv, s.mu(), 1e-4);
  });
}

TEST_CASE("mgf_exponential examples, pole and derivative at 0") {
  CHECK(mgf_exponential(make_exponential_spec(std::vector{1.0}), 0.0) == 1.0);
  CHECK(mgf_exponential(make_exponential_spec(std::vector{1.0, 2.0}), 0.5) ==
        doctest::Approx(8.0 / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(mgf_exponential(make_exponential_spec(std::vector{1.0}), 1.0), Error);

  for_all(13, 200, [](CounterRng& r) { return gen_rates(r); }, [](const auto& a) {
    const auto s = make_exponential_spec(a);
    CHECK(mgf_exponential(s, 0.0) == 1.0);
    const double h = 1e-6;
    const double deriv = (mgf_exponential(s, h) - mgf_exponential(s, -h)) / (2 * h);
    CHECK_REL(deriv, s.mu(), 1e-4);
  });
}

TEST_CASE("log_inequality_check") {
  CHECK(log_inequality_check(0.5, 0.5));
  CHECK(log_inequality_check(0.1, 0.9));
  CHECK_THROWS_AS(log_inequality_check(0.5, 0.1), Error);
  CHECK_THROWS_AS(log_inequality_check(0.0, 0.5), Error);
  CHECK_THROWS_AS(log_inequality_check(0.5, 1.0), Error);

  int violations = 0;
  for (int i = 1; i <= 100; ++i) {
    const double y = 0.99 * i / 100.0;
    for (int j = 1; j <= 100; ++j) {
      const double x = y * j / 100.0;
      if (!log_inequality_check(x, y)) ++violations;
    }
  }
  CHECK(violations == 0);
}
