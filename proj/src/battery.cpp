#include "jamsec/battery.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "jamsec/types.hpp"

namespace jamsec {

namespace {

void require_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) throw ConfigError(std::string(name) + " must lie in [0, 1]");
}

// Sum_{k=0}^{n-1} r^k for 0 <= r <= 1.
double geometric_sum(double r, int n) {
  if (r == 1.0) return n;
  if (std::abs(1.0 - r) < 1e-4) {
    // Horner form; the closed form loses digits to cancellation here.
    double s = 0.0;
    for (int k = 0; k < n; ++k) s = 1.0 + r * s;
    return s;
  }
  return -std::expm1(n * std::log(r)) / (1.0 - r);
}

}  // namespace

BatteryState step(BatteryState state, bool arrival, bool depart) {
  if (depart) {
    if (state.level <= 0) throw ContractViolation("departure requested from an empty battery");
    --state.level;
  }
  if (arrival) state.level = std::min(state.level + 1, state.cap);
  return state;
}

double chain_ratio(double lambda, double mu) { return lambda * (1.0 - mu) / ((1.0 - lambda) * mu); }

BatteryChain geo_geo1_steady_state(double lambda, double mu, int cap) {
  require_probability(lambda, "lambda");
  require_probability(mu, "mu");
  if (cap < 1) throw ConfigError("battery capacity must be >= 1");

  BatteryChain chain{lambda, mu, cap, Eigen::VectorXd::Zero(cap + 1)};
  Eigen::VectorXd& nu = chain.steady;

  if (mu == 1.0) {
    // Every stored packet leaves next slot: the level is just the last arrival.
    nu[0] = 1.0 - lambda;
    nu[1] = lambda;
    return chain;
  }
  if (lambda == 1.0) {
    nu[cap] = 1.0;
    return chain;
  }
  if (mu == 0.0) {
    nu[lambda > 0.0 ? cap : 0] = 1.0;
    return chain;
  }

  const double eta = chain_ratio(lambda, mu);
  const double keep = 1.0 - mu;
  if (eta <= 1.0) {
    // S = sum_{n=1}^{cap} eta^n
    const double s = eta * geometric_sum(eta, cap);
    const double denom = keep + s;
    nu[0] = keep / denom;
    double power = 1.0;
    for (int n = 1; n <= cap; ++n) {
      power *= eta;
      nu[n] = power / denom;
    }
  } else {
    // Divide through by eta^cap: with r = 1/eta,
    //   nu_n = r^(cap-n) / ((1 - mu) r^cap + sum_{k=0}^{cap-1} r^k).
    const double r = 1.0 / eta;
    const double r_cap = std::pow(r, cap);
    const double denom = keep * r_cap + geometric_sum(r, cap);
    nu[0] = keep * r_cap / denom;
    double power = 1.0;
    for (int n = cap; n >= 1; --n) {
      nu[n] = power / denom;
      power *= r;
    }
  }
  return chain;
}

double empty_prob_large_capacity(double lambda, double mu) {
  require_probability(lambda, "lambda");
  require_probability(mu, "mu");
  if (mu == 0.0) return lambda > 0.0 ? 0.0 : 1.0;
  return 1.0 - std::min(lambda / mu, 1.0);
}

double geo_d1_empty_prob(double lambda) {
  require_probability(lambda, "lambda");
  return 1.0 - lambda;
}

}  // namespace jamsec
