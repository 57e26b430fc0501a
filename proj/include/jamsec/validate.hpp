#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "jamsec/battery.hpp"

namespace jamsec {

/// Outcome of one property suite. `deviation` is the worst measured value of
/// the suite's primary check and `tolerance` the limit it was held to.
struct SuiteResult {
  std::string name;
  bool passed = false;
  double deviation = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct ValidationReport {
  std::vector<SuiteResult> suites;

  [[nodiscard]] bool all_passed() const;
  /// One line per suite; contains no timing, so equal seeds give equal text.
  void print(std::ostream& out) const;
};

using SteadyStateFn = std::function<BatteryChain(double lambda, double mu, int cap)>;

struct ValidationOptions {
  std::uint64_t seed = 1;
  /// Closed form under test by the Markov suites.
  SteadyStateFn steady_state = &geo_geo1_steady_state;
};

[[nodiscard]] ValidationReport run_validate(const ValidationOptions& options = {});

// Individual suites. Sizes are parameters so the acceptance run can use the
// full sample counts while `validate` stays quick.

/// Psi Hermitian, idempotent, annihilates h_jb, trace K-1 and equal to the
/// projector of an independent QR complement basis.
[[nodiscard]] SuiteResult check_projector(std::uint64_t seed, int instances_per_k);

/// Null at Bob, unit norm, projection identity, phase invariance and
/// optimality against `competitors` sampled Bob-nulling unit vectors.
[[nodiscard]] SuiteResult check_beamformer(std::uint64_t seed, int instances_per_k, std::int64_t competitors);

[[nodiscard]] SuiteResult check_precoder(std::uint64_t seed, int instances_per_k);

/// Clipping [C_AB - C_AE]^+, the bound secrecy <= C_AB and the positivity
/// conditions of both regimes.
[[nodiscard]] SuiteResult check_secrecy_clipping(std::uint64_t seed, int draws);

/// Jammed secrecy >= unjammed secrecy at equal alpha and after optimization.
[[nodiscard]] SuiteResult check_jamming_dominance(std::uint64_t seed, int draws);

/// optimize_alpha against a dense-grid maximum over (0, 1].
[[nodiscard]] SuiteResult check_alpha_optimizer(std::uint64_t seed, int instances, int dense_points);

/// Closed form against the linear-solve oracle on lambda, mu in {0.1..0.9}
/// and cap in {1, 2, 5, 10, 50} (includes lambda = mu).
[[nodiscard]] SuiteResult check_markov_closed_form(const SteadyStateFn& steady_state);

/// nu_0 at cap = 1000 against 1 - min(lambda/mu, 1), skipping |lambda - mu| < 0.05.
[[nodiscard]] SuiteResult check_large_capacity_limit(const SteadyStateFn& steady_state);

/// Simulated empty probability of a unit-service battery against 1 - lambda.
[[nodiscard]] SuiteResult check_geo_d1_empty(std::uint64_t seed, std::int64_t slots);

[[nodiscard]] SuiteResult check_simulator_determinism(std::uint64_t seed);

/// Simulated mu_a against the saturated-battery predictions.
[[nodiscard]] SuiteResult check_special_case_predictors(std::uint64_t seed, std::int64_t slots);

}  // namespace jamsec
