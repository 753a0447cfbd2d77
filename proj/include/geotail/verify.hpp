#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "geotail/rng.hpp"

namespace geotail {

struct VerifyOptions {
  int trials = 200;
  std::uint64_t seed = 0;
  /// When set, every trial uses this geometric instance instead of a random one.
  std::optional<std::vector<double>> fixed_p;
};

struct VerifyReport {
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  /// One line per violated property, with the instance that broke it.
  std::vector<std::string> failures;

  bool ok() const noexcept { return violations == 0; }
};

/// Runs the sandwich, dominance, lower-tail, Lemma L0 and helper-inequality
/// properties over `trials` random instances. For a fixed instance the
/// five-number sandwich (tl, exact, thm2, thm1, cor1) is written to `log`.
VerifyReport run_verify(const VerifyOptions& opts, std::ostream& log);

/// Random geometric parameters: n in [1, 8], p_i uniform in [0.05, 1], with
/// roughly one in ten set to exactly 1.
std::vector<double> random_geometric_params(CounterRng& rng, int max_n = 8);

/// Random rates: n in [1, 6], a_i log-uniform in [0.1, 10].
std::vector<double> random_rates(CounterRng& rng, int max_n = 6);

}  // namespace geotail
