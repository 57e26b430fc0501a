#include <cmath>

#include <catch_amalgamated.hpp>

#include "jamsec/battery.hpp"
#include "jamsec/montecarlo.hpp"

using namespace jamsec;

namespace {

SystemParams small_system() {
  SystemParams p;
  p.n_antennas = 4;
  p.k_active = 4;
  p.alpha_grid = 16;
  return p;
}

}  // namespace

TEST_CASE("no harvested energy means no secure throughput", "[montecarlo]") {
  SystemParams p = small_system();
  p.lambda_a = 0.0;
  const SimResult r = simulate(p, 5000, RandomStream(1));
  CHECK(r.mu_a == 0.0);
  CHECK(r.p_a_on == 0.0);
  CHECK(r.p_joint_on == 0.0);
  CHECK(r.ci_halfwidth == 0.0);
}

TEST_CASE("always-charged batteries give the jammed mean", "[montecarlo]") {
  SystemParams p = small_system();
  p.lambda_a = 1.0;
  p.lambda_j = 1.0;
  const SimResult r = simulate(p, 20000, RandomStream(2));
  CHECK(r.p_joint_on == 1.0);
  CHECK(std::abs(r.mu_a - r.mean_rate_jammed) <= r.ci_halfwidth);
  CHECK(r.mu_a <= r.mean_rate_jammed);
}

TEST_CASE("jammer occupancy follows lambda_j / beta with a large battery", "[montecarlo]") {
  SystemParams p = small_system();
  p.lambda_a = 1.0;
  p.lambda_j = 0.2;
  p.cap_j = 1000;
  const SimResult r = simulate(p, 40000, RandomStream(3));
  CHECK(std::abs(r.p_j_on - p.lambda_j / r.beta_hat) <= 0.01);
  CHECK(std::abs(r.mu_b_j - r.beta_hat) <= 0.02);
}

TEST_CASE("closed-form predictors", "[montecarlo]") {
  CHECK(saturation_fraction(0.3, 0.6) == 0.5);
  CHECK(saturation_fraction(0.9, 0.6) == 1.0);
  CHECK(saturation_fraction(0.2, 0.0) == 1.0);
  CHECK(std::abs(predict_mu_a_alice_saturated(5.0, 1.0, 0.3, 0.6) - 3.0) <= 1e-15);
  CHECK(predict_mu_a_alice_saturated(5.0, 1.0, 0.9, 0.6) == 5.0);
  CHECK(std::abs(predict_mu_a_jimmy_saturated(5.0, 0.3, 0.6) - 2.5) <= 1e-15);
  CHECK(std::abs(predict_mu_a_geo_d1(5.0, 1.0, 0.5, 0.25) - 1.0) <= 1e-15);

  RegimeEstimate est;
  est.mean_jammed = 5.0;
  est.mean_unjammed = 1.0;
  est.beta_hat = 0.6;
  const Prediction exact = predict_alice_saturated(est, 0.3);
  CHECK(std::abs(exact.value - 3.0) <= 1e-15);
  CHECK(exact.halfwidth == 0.0);
  est.mean_covariance(0, 0) = 0.01;
  CHECK(std::abs(predict_jimmy_saturated(est, 0.3).halfwidth - 1.96 * 0.05) <= 1e-12);
}

TEST_CASE("beta tracks the jammer power", "[montecarlo]") {
  SystemParams p = small_system();
  p.n_antennas = 2;
  p.k_active = 2;
  p.snr_j = 1e-9;
  CHECK(std::abs(estimate_regime_means_and_beta(p, 20000, RandomStream(4)).beta_hat - 0.5) <= 0.01);
  p.snr_j = 1e9;
  CHECK(estimate_regime_means_and_beta(p, 20000, RandomStream(4)).beta_hat >= 0.999);
}

TEST_CASE("regime estimate reuses the simulator channels", "[montecarlo]") {
  SystemParams p = small_system();
  p.lambda_a = 1.0;
  p.lambda_j = 1.0;
  const RandomStream stream(5);
  SimOptions options;
  options.n_slots = 3000;
  options.warmup = 0;
  const SimResult sim = simulate(p, options, stream);
  const RegimeEstimate est = estimate_regime_means_and_beta(p, 3000, stream);
  CHECK(std::abs(sim.mean_rate_jammed - est.mean_jammed) <= 1e-12);
  CHECK(std::abs(sim.mean_rate_unjammed - est.mean_unjammed) <= 1e-12);
  CHECK(std::abs(sim.beta_hat - est.beta_hat) <= 1e-12);
  CHECK(est.se_jammed > 0.0);
  CHECK(est.mean_covariance.isApprox(est.mean_covariance.transpose()));
}

TEST_CASE("simulation invariants", "[montecarlo]") {
  for (const double lambda_a : {0.3, 0.8}) {
    for (const double lambda_j : {0.2, 0.9}) {
      SystemParams p = small_system();
      p.lambda_a = lambda_a;
      p.lambda_j = lambda_j;
      const SimResult r = simulate(p, 10000, RandomStream(6));
      CHECK(r.mu_a >= 0.0);
      CHECK(r.mu_a <= r.mean_rate_jammed);
      CHECK(r.mean_rate_unjammed <= r.mean_rate_jammed);
      CHECK(r.p_joint_on + r.p_a_on_j_off == r.p_a_on);
      CHECK(r.p_joint_on <= std::min(r.p_a_on, r.p_j_on));
      CHECK(r.p_a_on <= 1.0);
      CHECK(r.beta_hat <= 1.0);
      CHECK(r.n_slots == 10000);
      CHECK(r.n_batches >= 30);
      CHECK(r.ci_halfwidth > 0.0);
      // a battery cannot serve more than it harvests
      CHECK(r.mu_b_a * r.p_a_on <= lambda_a + 0.02);
      CHECK(r.mu_b_j * r.p_j_on <= lambda_j + 0.02);
    }
  }
}

TEST_CASE("simulation is deterministic per seed and replica count", "[montecarlo]") {
  const SystemParams p = small_system();
  SimOptions options;
  options.n_slots = 6000;
  options.replicas = 3;
  const SimResult a = simulate(p, options, RandomStream(7));
  const SimResult b = simulate(p, options, RandomStream(7));
  CHECK(a == b);
  CHECK(a.n_slots == 6000);
  CHECK_FALSE(a == simulate(p, options, RandomStream(8)));
  options.replicas = 1;
  CHECK_FALSE(a == simulate(p, options, RandomStream(7)));
}

TEST_CASE("throughput grows with the harvesting rates", "[montecarlo]") {
  SystemParams p = small_system();
  p.lambda_a = 1.0;
  SimResult previous;
  for (const double lambda_j : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    p.lambda_j = lambda_j;
    const SimResult r = simulate(p, 10000, RandomStream(9));
    if (previous.n_slots > 0) CHECK(r.mu_a >= previous.mu_a - 2.0 * r.ci_halfwidth);
    previous = r;
  }
  p.lambda_j = 1.0;
  previous = {};
  for (const double lambda_a : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    p.lambda_a = lambda_a;
    const SimResult r = simulate(p, 10000, RandomStream(9));
    if (previous.n_slots > 0) CHECK(r.mu_a >= previous.mu_a - 2.0 * r.ci_halfwidth);
    previous = r;
  }
}

TEST_CASE("batch-means interval covers the exact throughput", "[montecarlo][slow]") {
  // With lambda_j = 1 the jammer is always charged and Alice's battery is a
  // Geo/Geo/1 chain with service probability beta, so mu_a = (1 - nu_0) m_j.
  SystemParams p = small_system();
  p.lambda_a = 0.6;
  p.lambda_j = 1.0;
  const RegimeEstimate truth = estimate_regime_means_and_beta(p, 400000, RandomStream(1000));
  const double mu_true =
      geo_geo1_steady_state(p.lambda_a, truth.beta_hat, p.cap_a).nonempty_prob() * truth.mean_jammed;

  int covered = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const SimResult r = simulate(p, 4000, RandomStream(seed));
    if (std::abs(r.mu_a - mu_true) <= r.ci_halfwidth) ++covered;
  }
  CHECK(covered >= 45);
}

TEST_CASE("depleting on insecure slots spends more energy", "[montecarlo]") {
  SystemParams p = small_system();
  p.n_antennas = 2;
  p.k_active = 2;
  p.snr_j = 1.0;
  p.lambda_a = 0.5;
  p.lambda_j = 0.5;
  SimOptions options;
  options.n_slots = 20000;
  const SimResult abstain = simulate(p, options, RandomStream(10));
  options.deplete_on_insecure = true;
  const SimResult deplete = simulate(p, options, RandomStream(10));
  CHECK(deplete.p_a_on < abstain.p_a_on);
  CHECK(deplete.mu_b_a == 1.0);
  CHECK(deplete.mu_a <= abstain.mu_a + abstain.ci_halfwidth + deplete.ci_halfwidth);
}

TEST_CASE("Student-t quantile", "[montecarlo]") {
  CHECK(std::abs(t_quantile_975(29) - 2.045229642132703) <= 1e-9);
  CHECK(std::abs(t_quantile_975(1000000) - 1.959963984540054) <= 1e-5);
}
