#pragma once

#include <Eigen/Dense>

namespace jamsec {

/// Energy packets stored in a battery of capacity `cap`.
struct BatteryState {
  int level = 0;
  int cap = 1;
};

/// One slot of battery dynamics: the departure (if any) is served first, then
/// the arrival is stored, and a packet that would exceed `cap` is dropped.
/// Departing from an empty battery throws ContractViolation.
[[nodiscard]] BatteryState step(BatteryState state, bool arrival, bool depart);

/// Discrete-time Geo/Geo/1/cap birth-death chain of a battery with Bernoulli
/// arrivals (lambda) and Bernoulli service (mu), using the same
/// departure-then-arrival convention as step().
struct BatteryChain {
  double lambda = 0.0;
  double mu = 0.0;
  int cap = 1;
  Eigen::VectorXd steady;  ///< probability of levels 0..cap

  [[nodiscard]] double empty_prob() const { return steady[0]; }
  [[nodiscard]] double nonempty_prob() const { return 1.0 - steady[0]; }
};

/// lambda (1 - mu) / ((1 - lambda) mu): ratio of successive level probabilities
/// above level one.
[[nodiscard]] double chain_ratio(double lambda, double mu);

/// Closed-form steady state of the finite chain,
///   nu_n = nu_0 eta^n / (1 - mu),   n = 1..cap,
/// normalized over 0..cap. eta = 1 uses the exact limit of the geometric sum,
/// and eta > 1 is evaluated in powers of 1/eta so large capacities do not
/// overflow. The boundary cases mu in {0, 1} and lambda = 1 are solved
/// separately because the closed form is indeterminate there.
[[nodiscard]] BatteryChain geo_geo1_steady_state(double lambda, double mu, int cap);

/// Empty probability as cap -> infinity: 1 - min(lambda / mu, 1).
/// For mu = 0 the battery only fills, so the answer is 1 iff lambda = 0.
[[nodiscard]] double empty_prob_large_capacity(double lambda, double mu);

/// Empty probability of the Geo/D/1 queue with unit service: 1 - lambda.
[[nodiscard]] double geo_d1_empty_prob(double lambda);

}  // namespace jamsec
