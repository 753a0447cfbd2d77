#include "geotail/verify.hpp"

#include <cmath>
#include <sstream>

#include "geotail/exact_oracle.hpp"
#include "geotail/exp_bounds.hpp"
#include "geotail/geom_bounds.hpp"
#include "geotail/io.hpp"
#include "geotail/model.hpp"

namespace geotail {

namespace {

constexpr double kUpperLambdas[] = {1.0, 1.25, 1.5, 2.0, 3.0, 5.0};
constexpr double kLowerLambdas[] = {0.2, 0.5, 0.8, 1.0};
constexpr double kSlack = 1e-10;
constexpr double kChainSlack = 1e-12;

std::string join(const std::vector<double>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += format_number(v[i], 17);
  }
  return s + "]";
}

class Checker {
 public:
  explicit Checker(VerifyReport& report) : report_(report) {}

  void context(std::string ctx) { ctx_ = std::move(ctx); }

  void expect(bool ok, const std::string& what) {
    ++report_.checks;
    if (!ok) {
      ++report_.violations;
      report_.failures.push_back(what + " for " + ctx_);
    }
  }

  /// bound a <= bound b, relative slack on both.
  void le(const BoundResult& a, const BoundResult& b) {
    expect(a.log_value() <= b.log_value() + kChainSlack,
           std::string(to_string(a.method)) + " <= " + std::string(to_string(b.method)));
  }

  /// oracle <= upper bound.
  void exact_le(const TailEstimate& e, const BoundResult& b) {
    expect(e.value - e.error_bound <= b.value() * (1.0 + kSlack),
           "exact <= " + std::string(to_string(b.method)) + " (exact " +
               format_number(e.value) + ", bound " + format_number(b.value()) + ")");
  }

  /// lower bound <= oracle.
  void bound_le_exact(const BoundResult& b, const TailEstimate& e) {
    expect(b.value() * (1.0 - kSlack) <= e.value + e.error_bound,
           std::string(to_string(b.method)) + " <= exact (bound " + format_number(b.value()) +
               ", exact " + format_number(e.value) + ")");
  }

 private:
  VerifyReport& report_;
  std::string ctx_;
};

void check_geometric(const GeometricSumSpec& spec, Checker& c, std::ostream* sandwich_log) {
  for (double lambda : kUpperLambdas) {
    const double x = lambda * spec.mu();
    c.context("p=" + join(spec.params()) + " lambda=" + format_number(lambda));
    const auto exact = geom_tail_exact(spec, x, 1e-13);
    const auto tl = upper_tail_lower_bound_tl(spec, lambda);
    const auto thm1 = upper_tail_thm1(spec, lambda);
    const auto thm2 = upper_tail_thm2(spec, lambda);
    const auto cor1 = upper_tail_cor1(lambda);
    const auto cor2 = upper_tail_cor2(lambda);
    const auto opt = optimized_chernoff(spec, lambda);
    const auto best = best_upper(spec, lambda);

    c.bound_le_exact(tl, exact);
    c.exact_le(exact, thm2);
    c.exact_le(exact, cor2);
    c.exact_le(exact, best);
    c.le(thm2, thm1);
    c.le(thm1, cor1);
    c.le(thm2, cor2);
    c.le(cor2, cor1);
    c.le(opt, thm1);
    if (spec.p_min() < 1.0) {
      c.le(lemma1_bound(spec, x, lemma1_reference_z(spec, lambda)), thm2);
    }
    if (sandwich_log) {
      *sandwich_log << "lambda=" << format_number(lambda) << " tl=" << format_number(tl.value())
                    << " exact=" << format_number(exact.value)
                    << " thm2=" << format_number(thm2.value())
                    << " thm1=" << format_number(thm1.value())
                    << " cor1=" << format_number(cor1.value()) << '\n';
    }
  }

  for (double lambda : kLowerLambdas) {
    c.context("p=" + join(spec.params()) + " lower lambda=" + format_number(lambda));
    const auto exact = geom_lower_tail_exact(spec, lambda * spec.mu());
    c.exact_le(exact, lower_tail_tl1(spec, lambda));
  }

  // Lemma L0 on integer and real argument pairs.
  c.context("p=" + join(spec.params()) + " lemma L0");
  const auto n = static_cast<double>(spec.size());
  const double top = std::ceil(3.0 * spec.mu()) + 2.0;
  const double q = 1.0 - spec.p_min();
  for (double k = n - 1.0; k <= top; k += std::max(1.0, std::floor(top / 12.0))) {
    const auto tk = geom_tail_exact(spec, k, 1e-13);
    for (double j = k; j <= top; j += std::max(1.0, std::floor(top / 7.0))) {
      const auto tj = geom_tail_exact(spec, j, 1e-13);
      const double rhs = std::pow(q, j - k) * tk.value;
      c.expect(tj.value + tj.error_bound >= rhs * (1.0 - kSlack) - tk.error_bound,
               "L0(ao) j=" + format_number(j) + " k=" + format_number(k));
      const double xr = j + 0.37, yr = k - 0.41;
      const auto tx = geom_tail_exact(spec, xr, 1e-13);
      const auto ty = geom_tail_exact(spec, yr, 1e-13);
      const double rhs_real = std::pow(q, xr - yr + 1.0) * ty.value;
      c.expect(tx.value + tx.error_bound >= rhs_real * (1.0 - kSlack) - ty.error_bound,
               "L0(aoxy) x=" + format_number(xr) + " y=" + format_number(yr));
    }
  }
}

void check_exponential(const ExponentialSumSpec& spec, Checker& c) {
  std::vector<double> rates = spec.rates();
  for (double lambda : kUpperLambdas) {
    c.context("a=" + join(rates) + " lambda=" + format_number(lambda));
    const auto exact = hypoexp_survival(spec, lambda * spec.mu());
    const auto lower = exp_tail_lower_iv(spec, lambda);
    const auto upper_i = exp_upper_i(spec, lambda);
    const auto upper_ii = exp_upper_ii(lambda);
    c.bound_le_exact(lower, exact);
    c.exact_le(exact, upper_i);
    c.le(upper_i, upper_ii);
  }
  for (double lambda : kLowerLambdas) {
    c.context("a=" + join(rates) + " lower lambda=" + format_number(lambda));
    c.exact_le(hypoexp_cdf(spec, lambda * spec.mu()), exp_lower_tail_iii(spec, lambda));
  }
}

void check_helpers(CounterRng& rng, Checker& c) {
  for (int i = 0; i < 16; ++i) {
    const double y = 0.99 * rng.uniform_open();
    const double x = y * rng.uniform_open();
    c.context("x=" + format_number(x, 17) + " y=" + format_number(y, 17));
    c.expect(log_inequality_check(x, y), "log inequality");
    const double A = 1.0 + 50.0 * rng.uniform_open();
    const double xa = rng.uniform_open() / A;
    c.context("A=" + format_number(A, 17) + " x=" + format_number(xa, 17));
    c.expect(lemma_la_check(A, xa), "lemma LA");
  }
}

}  // namespace

std::vector<double> random_geometric_params(CounterRng& rng, int max_n) {
  const int n = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(max_n));
  std::vector<double> p(static_cast<std::size_t>(n));
  for (double& v : p) {
    if (rng.next() % 10 == 0) {
      v = 1.0;
    } else {
      v = 0.05 + 0.95 * rng.uniform_open();
    }
  }
  return p;
}

std::vector<double> random_rates(CounterRng& rng, int max_n) {
  const int n = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(max_n));
  std::vector<double> a(static_cast<std::size_t>(n));
  for (double& v : a) v = std::exp(std::log(0.1) + std::log(100.0) * rng.uniform_open());
  return a;
}

VerifyReport run_verify(const VerifyOptions& opts, std::ostream& log) {
  VerifyReport report;
  Checker c(report);
  for (int t = 0; t < opts.trials; ++t) {
    CounterRng rng(opts.seed, static_cast<std::uint64_t>(t));
    if (opts.fixed_p) {
      const auto spec = make_geometric_spec(*opts.fixed_p);
      check_geometric(spec, c, t == 0 ? &log : nullptr);
    } else {
      check_geometric(make_geometric_spec(random_geometric_params(rng)), c, nullptr);
      check_exponential(make_exponential_spec(random_rates(rng)), c);
    }
    check_helpers(rng, c);
  }
  return report;
}

}  // namespace geotail
