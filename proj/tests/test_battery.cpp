#include <cmath>

#include <catch_amalgamated.hpp>

#include "jamsec/battery.hpp"
#include "jamsec/oracles.hpp"
#include "jamsec/types.hpp"

using namespace jamsec;

namespace {

Eigen::VectorXd oracle_steady(double lambda, double mu, int cap) {
  return oracle::stationary_distribution(oracle::battery_transition_matrix(lambda, mu, cap));
}

}  // namespace

TEST_CASE("battery step", "[battery]") {
  CHECK(step({0, 10}, true, false).level == 1);
  CHECK(step({10, 10}, true, false).level == 10);
  CHECK(step({5, 10}, true, true).level == 5);
  CHECK(step({10, 10}, true, true).level == 10);
  CHECK(step({3, 10}, false, true).level == 2);
  CHECK_THROWS_AS(step({0, 10}, true, true), ContractViolation);
}

TEST_CASE("battery step keeps the level inside [0, cap]", "[battery]") {
  for (int cap : {1, 2, 7}) {
    for (int level = 0; level <= cap; ++level) {
      for (bool arrival : {false, true}) {
        for (bool depart : {false, true}) {
          if (depart && level == 0) continue;
          const BatteryState next = step({level, cap}, arrival, depart);
          CHECK(next.level >= 0);
          CHECK(next.level <= cap);
        }
      }
    }
  }
}

TEST_CASE("steady state at eta = 1 uses the exact limit", "[battery]") {
  for (const double x : {0.1, 0.3, 0.5, 0.9}) {
    for (const int cap : {1, 4, 25}) {
      const BatteryChain chain = geo_geo1_steady_state(x, x, cap);
      CHECK(std::abs(chain.empty_prob() - 1.0 / (1.0 + cap / (1.0 - x))) <= 1e-14);
      CHECK((chain.steady - oracle_steady(x, x, cap)).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
}

TEST_CASE("steady state without arrivals is empty", "[battery]") {
  const BatteryChain chain = geo_geo1_steady_state(0.0, 0.4, 6);
  CHECK(chain.empty_prob() == 1.0);
  CHECK(chain.steady.tail(6).isZero());
}

TEST_CASE("steady state for lambda 0.3, mu 0.6, cap 10 matches the linear solve", "[battery]") {
  const BatteryChain chain = geo_geo1_steady_state(0.3, 0.6, 10);
  const Eigen::VectorXd solved = oracle_steady(0.3, 0.6, 10);
  CHECK((chain.steady - solved).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(std::abs(chain.steady.sum() - 1.0) <= 1e-12);
  CHECK((chain.steady.array() >= 0.0).all());
}

TEST_CASE("closed form matches the linear solve on the 9x9x5 grid", "[battery]") {
  double worst = 0.0;
  for (int li = 1; li <= 9; ++li) {
    for (int mi = 1; mi <= 9; ++mi) {
      for (const int cap : {1, 2, 5, 10, 50}) {
        const double lambda = li / 10.0, mu = mi / 10.0;
        const BatteryChain chain = geo_geo1_steady_state(lambda, mu, cap);
        worst = std::max(worst, (chain.steady - oracle_steady(lambda, mu, cap)).cwiseAbs().maxCoeff());

        // the chain balances: nu = nu P
        const Eigen::MatrixXd p = oracle::battery_transition_matrix(lambda, mu, cap);
        const Eigen::VectorXd image = p.transpose() * chain.steady;
        CHECK((image - chain.steady).cwiseAbs().maxCoeff() <= 1e-12);
      }
    }
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("empty probability is monotone in lambda and mu", "[battery]") {
  for (const int cap : {1, 5, 50}) {
    for (int li = 1; li <= 9; ++li) {
      for (int mi = 1; mi <= 9; ++mi) {
        const double here = geo_geo1_steady_state(li / 10.0, mi / 10.0, cap).empty_prob();
        if (li < 9) CHECK(geo_geo1_steady_state((li + 1) / 10.0, mi / 10.0, cap).empty_prob() <= here + 1e-15);
        if (mi < 9) CHECK(geo_geo1_steady_state(li / 10.0, (mi + 1) / 10.0, cap).empty_prob() >= here - 1e-15);
      }
    }
  }
}

TEST_CASE("boundary service and arrival probabilities", "[battery]") {
  for (const double lambda : {0.0, 0.25, 1.0}) {
    const BatteryChain unit = geo_geo1_steady_state(lambda, 1.0, 8);
    CHECK((unit.steady - oracle_steady(lambda, 1.0, 8)).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(unit.empty_prob() == geo_d1_empty_prob(lambda));
  }
  CHECK(geo_geo1_steady_state(1.0, 0.4, 8).steady[8] == 1.0);
  CHECK(geo_geo1_steady_state(0.3, 0.0, 8).steady[8] == 1.0);
  CHECK(geo_geo1_steady_state(0.0, 0.0, 8).steady[0] == 1.0);
  CHECK_THROWS_AS(geo_geo1_steady_state(1.2, 0.5, 3), ConfigError);
  CHECK_THROWS_AS(geo_geo1_steady_state(0.2, 0.5, 0), ConfigError);
}

TEST_CASE("large capacities do not overflow", "[battery]") {
  const BatteryChain full = geo_geo1_steady_state(0.9, 0.1, 1000);  // eta = 81
  CHECK(full.steady.allFinite());
  CHECK(std::abs(full.steady.sum() - 1.0) <= 1e-12);
  CHECK(full.empty_prob() == 0.0);
}

TEST_CASE("large-capacity empty probability", "[battery]") {
  CHECK(empty_prob_large_capacity(0.9, 0.3) == 0.0);
  CHECK(std::abs(empty_prob_large_capacity(0.2, 0.5) - 0.6) <= 1e-15);
  CHECK(std::abs(geo_geo1_steady_state(0.3, 0.6, 1000).empty_prob() - empty_prob_large_capacity(0.3, 0.6)) <= 1e-6);
  CHECK(empty_prob_large_capacity(0.4, 0.0) == 0.0);
  CHECK(empty_prob_large_capacity(0.0, 0.0) == 1.0);
}

TEST_CASE("Geo/D/1 empty probability", "[battery]") {
  CHECK(geo_d1_empty_prob(1.0) == 0.0);
  CHECK(geo_d1_empty_prob(0.0) == 1.0);
  CHECK(std::abs(geo_d1_empty_prob(0.35) - 0.65) <= 1e-15);
  CHECK_THROWS_AS(geo_d1_empty_prob(-0.1), ConfigError);
}
