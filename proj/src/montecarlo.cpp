#include "geotail/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include <boost/math/distributions/normal.hpp>

#include "geotail/error.hpp"

namespace geotail {

void McConfig::validate() const {
  if (samples == 0) throw Error(ErrorKind::InvalidConfig, "samples must be at least 1");
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw Error(ErrorKind::InvalidConfig, "confidence must lie in (0, 1)");
  }
}

std::int64_t sample_geometric_sum(const GeometricSumSpec& spec, CounterRng& rng) {
  std::int64_t total = 0;
  for (double p : spec.params()) {
    if (p >= 1.0) {
      total += 1;
      continue;
    }
    const double u = rng.uniform_open();
    total += static_cast<std::int64_t>(std::ceil(std::log(u) / std::log1p(-p)));
  }
  return total;
}

double sample_exponential_sum(const ExponentialSumSpec& spec, CounterRng& rng) {
  double total = 0.0;
  for (double a : spec.rates()) total += -std::log(rng.uniform_open()) / a;
  return total;
}

WilsonInterval wilson_interval(std::uint64_t hits, std::uint64_t trials, double confidence) {
  const double z =
      boost::math::quantile(boost::math::normal_distribution<double>(), 0.5 + confidence / 2.0);
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(hits) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
  return {std::max(0.0, center - half), std::min(1.0, center + half), half};
}

namespace {

template <typename Spec>
TailEstimate run_mc(const Spec& spec, double x, const McConfig& cfg, TailSide side) {
  cfg.validate();
  unsigned workers = cfg.workers == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                      : cfg.workers;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, cfg.samples));

  auto count_range = [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t hits = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      CounterRng rng(cfg.seed, i);
      double draw;
      if constexpr (std::is_same_v<Spec, GeometricSumSpec>) {
        draw = static_cast<double>(sample_geometric_sum(spec, rng));
      } else {
        draw = sample_exponential_sum(spec, rng);
      }
      hits += side == TailSide::Upper ? (draw >= x) : (draw <= x);
    }
    return hits;
  };

  std::vector<std::uint64_t> partial(workers, 0);
  {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = cfg.samples / workers;
    const std::uint64_t extra = cfg.samples % workers;
    std::uint64_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t end = begin + chunk + (w < extra ? 1 : 0);
      pool.emplace_back([&, w, begin, end] { partial[w] = count_range(begin, end); });
      begin = end;
    }
  }
  std::uint64_t hits = 0;
  for (auto h : partial) hits += h;

  const auto ci = wilson_interval(hits, cfg.samples, cfg.confidence);
  TailEstimate e;
  e.value = static_cast<double>(hits) / static_cast<double>(cfg.samples);
  e.log_value = hits > 0 ? std::log(e.value) : -std::numeric_limits<double>::infinity();
  e.error_bound = ci.half_width;
  e.method = EstimateMethod::MonteCarlo;
  e.interval_low = ci.low;
  e.interval_high = ci.high;
  return e;
}

}  // namespace

TailEstimate mc_tail(const GeometricSumSpec& spec, double x, const McConfig& cfg, TailSide side) {
  return run_mc(spec, x, cfg, side);
}

TailEstimate mc_tail(const ExponentialSumSpec& spec, double x, const McConfig& cfg,
                     TailSide side) {
  return run_mc(spec, x, cfg, side);
}

}  // namespace geotail
