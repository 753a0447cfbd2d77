#include "geotail/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <optional>
#include <sstream>

#include "geotail/error.hpp"
#include "geotail/exact_oracle.hpp"
#include "geotail/exp_bounds.hpp"
#include "geotail/geom_bounds.hpp"
#include "geotail/io.hpp"
#include "geotail/montecarlo.hpp"
#include "geotail/verify.hpp"

namespace geotail::cli {

namespace {

/// Raised for command-line misuse that CLI11 cannot express on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DistArgs {
  std::string dist = "geom";
  std::string p, a, p_file, a_file;

  void attach(CLI::App* cmd) {
    cmd->add_option("--dist", dist, "Summand family")->check(CLI::IsMember({"geom", "exp"}));
    auto* po = cmd->add_option("--p", p, "Comma-separated success probabilities");
    auto* pf = cmd->add_option("--p-file", p_file, "File of success probabilities");
    auto* ao = cmd->add_option("--a", a, "Comma-separated exponential rates");
    auto* af = cmd->add_option("--a-file", a_file, "File of exponential rates");
    po->excludes(pf);
    ao->excludes(af);
  }

  bool geometric() const { return dist == "geom"; }

  bool has_params() const {
    return geometric() ? !(p.empty() && p_file.empty()) : !(a.empty() && a_file.empty());
  }

  std::vector<double> values() const {
    const std::string& inline_list = geometric() ? p : a;
    const std::string& file = geometric() ? p_file : a_file;
    if (!file.empty()) return read_param_file(file);
    if (!inline_list.empty()) return parse_param_text(inline_list);
    throw UsageError(geometric() ? "give --p or --p-file" : "give --a or --a-file");
  }

  double mu() const {
    const auto v = values();
    return geometric() ? make_geometric_spec(v).mu() : make_exponential_spec(v).mu();
  }
};

struct QueryArgs {
  std::optional<double> lambda;
  std::optional<double> x;

  void attach(CLI::App* cmd) {
    auto* l = cmd->add_option("--lambda", lambda, "Threshold as a multiple of the mean");
    auto* xo = cmd->add_option("--x", x, "Absolute threshold");
    l->excludes(xo);
  }

  void require_one() const {
    if (!lambda && !x) throw UsageError("give --lambda or --x");
  }

  double lambda_for(double mu) const { return lambda ? *lambda : *x / mu; }
  double x_for(double mu) const { return x ? *x : *lambda * mu; }
};

TailSide parse_side(const std::string& s) { return s == "lower" ? TailSide::Lower : TailSide::Upper; }

std::string_view param_name(Method m) {
  switch (m) {
    case Method::Thm1:
    case Method::TL1:
    case Method::OptChernoff: return "t";
    default: return "z";
  }
}

std::string_view kind_text(BoundKind k) {
  switch (k) {
    case BoundKind::UpperTailUpper: return "upper bound on P(X >= x)";
    case BoundKind::LowerTailUpper: return "upper bound on P(X <= x)";
    case BoundKind::UpperTailLower: return "lower bound on P(X >= x)";
  }
  return "";
}

/// Linear value, plus the natural log when the linear form has underflowed.
void print_probability(std::ostream& out, std::string_view label, double value, double log_value) {
  out << label << ": " << format_number(value) << '\n';
  if (std::abs(log_value) > 700.0 && std::isfinite(log_value)) {
    out << "log_" << label << ": " << format_number(log_value) << '\n';
  }
}

// ---------------------------------------------------------------------------

struct BoundCmd {
  DistArgs dist;
  QueryArgs query;
  std::string method = "best";
  std::optional<double> z;

  void attach(CLI::App* cmd) {
    dist.attach(cmd);
    query.attach(cmd);
    cmd->add_option("--method", method, "Bound to evaluate")
        ->check(CLI::IsMember({"thm1", "thm2", "cor1", "cor2", "tl1", "tl", "lemma1",
                               "opt-chernoff", "opt-lemma1", "best", "texp-i", "texp-ii",
                               "texp-iii", "texp-iv"}));
    cmd->add_option("--z", z, "Generating-function argument for --method lemma1");
  }

  int run(std::ostream& out) const {
    query.require_one();
    const bool param_free = method == "cor1" || method == "cor2" || method == "texp-ii";
    const bool exp_method = method.rfind("texp", 0) == 0;
    if (exp_method == dist.geometric() && method != "best") {
      throw UsageError("method " + method + " does not apply to --dist " + dist.dist);
    }
    if (!dist.geometric() && method == "best") {
      throw UsageError("--method best is only defined for --dist geom");
    }

    std::optional<double> mu;
    if (!param_free || dist.has_params() || !query.lambda) mu = dist.mu();
    const double lambda = query.lambda ? *query.lambda : query.lambda_for(*mu);
    std::optional<double> x;
    if (mu) x = query.x_for(*mu);

    BoundResult r;
    if (method == "cor1") {
      r = upper_tail_cor1(lambda);
    } else if (method == "cor2") {
      r = upper_tail_cor2(lambda);
    } else if (method == "texp-ii") {
      r = exp_upper_ii(lambda);
    } else if (exp_method) {
      const auto spec = make_exponential_spec(dist.values());
      if (method == "texp-i") r = exp_upper_i(spec, lambda);
      if (method == "texp-iii") r = exp_lower_tail_iii(spec, lambda);
      if (method == "texp-iv") r = exp_tail_lower_iv(spec, lambda);
    } else {
      const auto spec = make_geometric_spec(dist.values());
      if (method == "thm1") r = upper_tail_thm1(spec, lambda);
      if (method == "thm2") r = upper_tail_thm2(spec, lambda);
      if (method == "tl1") r = lower_tail_tl1(spec, lambda);
      if (method == "tl") r = upper_tail_lower_bound_tl(spec, lambda);
      if (method == "opt-chernoff") r = optimized_chernoff(spec, lambda);
      if (method == "opt-lemma1") r = optimized_lemma1(spec, *x);
      if (method == "best") r = best_upper(spec, lambda);
      if (method == "lemma1") {
        if (!z) throw UsageError("--method lemma1 needs --z");
        r = lemma1_bound(spec, *x, *z);
      }
    }

    out << "method: " << to_string(r.method) << '\n';
    out << "kind: " << kind_text(kind_of(r.method)) << '\n';
    out << "lambda: " << format_number(lambda) << '\n';
    if (x) out << "x: " << format_number(*x) << '\n';
    out << "value: " << format_number(r.value()) << '\n';
    out << "log_value: " << format_number(r.log_value()) << '\n';
    if (r.internal_param) {
      out << param_name(r.method) << ": " << format_number(*r.internal_param) << '\n';
    }
    if (r.clamped) out << "clamped: true\n";
    return kOk;
  }
};

struct ExactCmd {
  DistArgs dist;
  QueryArgs query;
  double rel_tol = 1e-12;
  std::string side = "upper";

  void attach(CLI::App* cmd) {
    dist.attach(cmd);
    query.attach(cmd);
    cmd->add_option("--rel-tol", rel_tol, "Relative truncation tolerance for deep tails");
    cmd->add_option("--side", side, "Tail side")->check(CLI::IsMember({"upper", "lower"}));
  }

  int run(std::ostream& out) const {
    query.require_one();
    const auto params = dist.values();
    TailEstimate e;
    double x;
    if (dist.geometric()) {
      const auto spec = make_geometric_spec(params);
      x = query.x_for(spec.mu());
      e = parse_side(side) == TailSide::Upper ? geom_tail_exact(spec, x, rel_tol)
                                              : geom_lower_tail_exact(spec, x);
    } else {
      const auto spec = make_exponential_spec(params);
      x = query.x_for(spec.mu());
      e = parse_side(side) == TailSide::Upper ? hypoexp_survival(spec, x) : hypoexp_cdf(spec, x);
    }
    out << "x: " << format_number(x) << '\n';
    print_probability(out, "value", e.value, e.log_value);
    out << "error_bound: " << format_number(e.error_bound) << '\n';
    out << "method: " << to_string(e.method) << '\n';
    return kOk;
  }
};

struct McCmd {
  DistArgs dist;
  QueryArgs query;
  McConfig cfg;
  std::string side = "upper";

  void attach(CLI::App* cmd) {
    dist.attach(cmd);
    query.attach(cmd);
    cmd->add_option("--samples", cfg.samples, "Number of draws");
    cmd->add_option("--seed", cfg.seed, "RNG seed");
    cmd->add_option("--confidence", cfg.confidence, "Wilson interval confidence level");
    cmd->add_option("--workers", cfg.workers, "Worker threads (0 = all cores)");
    cmd->add_option("--side", side, "Tail side")->check(CLI::IsMember({"upper", "lower"}));
  }

  int run(std::ostream& out) const {
    query.require_one();
    const auto params = dist.values();
    TailEstimate e;
    double x;
    if (dist.geometric()) {
      const auto spec = make_geometric_spec(params);
      x = query.x_for(spec.mu());
      e = mc_tail(spec, x, cfg, parse_side(side));
    } else {
      const auto spec = make_exponential_spec(params);
      x = query.x_for(spec.mu());
      e = mc_tail(spec, x, cfg, parse_side(side));
    }
    out << "x: " << format_number(x) << '\n';
    out << "value: " << format_number(e.value) << '\n';
    out << "error_bound: " << format_number(e.error_bound) << '\n';
    out << "interval: [" << format_number(e.interval_low) << ", "
        << format_number(e.interval_high) << "]\n";
    out << "confidence: " << format_number(cfg.confidence) << '\n';
    out << "samples: " << cfg.samples << '\n';
    out << "seed: " << cfg.seed << '\n';
    out << "method: " << to_string(e.method) << '\n';
    return kOk;
  }
};

struct SweepCmd {
  DistArgs dist;
  double from = 1.0;
  double to = 1.0;
  int steps = 1;
  std::string format = "csv";
  double rel_tol = 1e-12;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  void attach(CLI::App* cmd) {
    dist.attach(cmd);
    cmd->add_option("--lambda-from,--from", from, "First lambda");
    cmd->add_option("--lambda-to,--to", to, "Last lambda");
    cmd->add_option("--steps", steps, "Number of grid points");
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "table"}));
    cmd->add_option("--rel-tol", rel_tol, "Exact-oracle truncation tolerance");
    cmd->add_option("--samples", samples, "Monte Carlo draws per row (0 = skip)");
    cmd->add_option("--seed", seed, "Monte Carlo seed");
  }

  int run(std::ostream& out) const {
    if (steps < 1) throw UsageError("--steps must be at least 1");
    if (!(from <= to)) throw UsageError("--lambda-from must not exceed --lambda-to");
    TailQuery{0.0, from}.require(TailSide::Upper);

    const auto params = dist.values();
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    McConfig cfg;
    cfg.samples = samples;
    cfg.seed = seed;

    auto lambda_at = [&](int i) {
      return steps == 1 ? from : from + (to - from) * i / (steps - 1);
    };
    auto mc_cells = [&](const TailEstimate* e, std::vector<std::string>& row) {
      row.push_back(e ? format_number(e->value) : "");
      row.push_back(e ? format_number(e->error_bound) : "");
    };

    if (dist.geometric()) {
      const auto spec = make_geometric_spec(params);
      header = {"lambda", "x", "thm1", "thm2", "cor1", "cor2", "opt_chernoff", "opt_lemma1",
                "tl_lower", "exact", "mc", "mc_halfwidth"};
      for (int i = 0; i < steps; ++i) {
        const double lambda = lambda_at(i);
        const double x = lambda * spec.mu();
        std::vector<std::string> row = {format_number(lambda), format_number(x)};
        for (const auto& b :
             {upper_tail_thm1(spec, lambda), upper_tail_thm2(spec, lambda), upper_tail_cor1(lambda),
              upper_tail_cor2(lambda), optimized_chernoff(spec, lambda),
              optimized_lemma1(spec, x), upper_tail_lower_bound_tl(spec, lambda)}) {
          row.push_back(format_number(b.value()));
        }
        row.push_back(format_number(geom_tail_exact(spec, x, rel_tol).value));
        std::optional<TailEstimate> mc;
        if (samples > 0) mc = mc_tail(spec, x, cfg);
        mc_cells(mc ? &*mc : nullptr, row);
        rows.push_back(std::move(row));
      }
    } else {
      const auto spec = make_exponential_spec(params);
      header = {"lambda", "x", "texp_i", "texp_ii", "texp_iv", "exact", "mc", "mc_halfwidth"};
      for (int i = 0; i < steps; ++i) {
        const double lambda = lambda_at(i);
        const double x = lambda * spec.mu();
        std::vector<std::string> row = {format_number(lambda), format_number(x)};
        for (const auto& b :
             {exp_upper_i(spec, lambda), exp_upper_ii(lambda), exp_tail_lower_iv(spec, lambda)}) {
          row.push_back(format_number(b.value()));
        }
        row.push_back(format_number(hypoexp_survival(spec, x).value));
        std::optional<TailEstimate> mc;
        if (samples > 0) mc = mc_tail(spec, x, cfg);
        mc_cells(mc ? &*mc : nullptr, row);
        rows.push_back(std::move(row));
      }
    }

    if (format == "csv") {
      auto emit = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
        out << '\n';
      };
      emit(header);
      for (const auto& r : rows) emit(r);
    } else {
      std::vector<std::size_t> width(header.size());
      for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
      }
      auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
          out << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << cells[c];
        }
        out << '\n';
      };
      emit(header);
      for (const auto& r : rows) emit(r);
    }
    return kOk;
  }
};

struct VerifyCmd {
  int trials = 0;
  std::uint64_t seed = 0;
  std::string p;

  void attach(CLI::App* cmd) {
    cmd->add_option("--trials", trials, "Number of random instances")->required();
    cmd->add_option("--seed", seed, "Instance generator seed");
    cmd->add_option("--p", p, "Use this geometric instance for every trial");
  }

  int run(std::ostream& out) const {
    if (trials < 1) throw UsageError("--trials must be at least 1");
    VerifyOptions opts;
    opts.trials = trials;
    opts.seed = seed;
    if (!p.empty()) opts.fixed_p = parse_param_text(p);
    const auto report = run_verify(opts, out);
    out << "checks: " << report.checks << '\n';
    out << "violations: " << report.violations << '\n';
    constexpr std::size_t kShown = 20;
    for (std::size_t i = 0; i < std::min(kShown, report.failures.size()); ++i) {
      out << "violation: " << report.failures[i] << '\n';
    }
    out << "result: " << (report.ok() ? "PASS" : "FAIL") << '\n';
    return report.ok() ? kOk : kPropertyViolation;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tail bounds for sums of independent geometric or exponential variables",
               "geotail"};
  app.require_subcommand(1);

  BoundCmd bound;
  ExactCmd exact;
  McCmd mc;
  SweepCmd sweep;
  VerifyCmd verify;
  auto* bound_cmd = app.add_subcommand("bound", "Evaluate one tail bound");
  auto* exact_cmd = app.add_subcommand("exact", "Exact tail probability");
  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo tail estimate");
  auto* sweep_cmd = app.add_subcommand("sweep", "Bounds and exact tails over a lambda grid");
  auto* verify_cmd = app.add_subcommand("verify", "Check the bound inequalities on random instances");
  bound.attach(bound_cmd);
  exact.attach(exact_cmd);
  mc.attach(mc_cmd);
  sweep.attach(sweep_cmd);
  verify.attach(verify_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (bound_cmd->parsed()) return bound.run(out);
    if (exact_cmd->parsed()) return exact.run(out);
    if (mc_cmd->parsed()) return mc.run(out);
    if (sweep_cmd->parsed()) return sweep.run(out);
    if (verify_cmd->parsed()) return verify.run(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::ParseError ? kUsage : kDomain;
  }
  return kUsage;
}

}  // namespace geotail::cli
