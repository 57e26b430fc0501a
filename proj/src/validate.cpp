#include "jamsec/validate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "jamsec/beamforming.hpp"
#include "jamsec/channel.hpp"
#include "jamsec/montecarlo.hpp"
#include "jamsec/oracles.hpp"
#include "jamsec/secrecy.hpp"

namespace jamsec {

namespace {

enum SuiteTag : std::uint64_t {
  kProjector = 101,
  kBeamformer,
  kPrecoder,
  kClipping,
  kDominance,
  kAlpha,
  kGeoD1,
  kDeterminism,
  kPredictors,
};

std::string format(const char* fmt, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, fmt, a, b, c);
  return buf;
}

ChannelSet<double> instance(std::uint64_t seed, SuiteTag tag, std::uint64_t index, int k) {
  CounterRng rng = RandomStream(seed).substream(tag).draw(index);
  return sample_channels<double>(rng, k);
}

double max_abs(const CMatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

// Parameter sets spanning interior and boundary optima in alpha.
std::vector<SystemParams> rate_scenarios() {
  std::vector<SystemParams> out;
  for (const auto& [snr_a, snr_j] : {std::pair{100.0, 100.0}, {100.0, 1.0}, {10.0, 0.1}, {1000.0, 0.01}}) {
    SystemParams p;
    p.snr_a = snr_a;
    p.snr_j = snr_j;
    out.push_back(p);
  }
  return out;
}

}  // namespace

bool ValidationReport::all_passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

void ValidationReport::print(std::ostream& out) const {
  for (const SuiteResult& s : suites) {
    char line[160];
    std::snprintf(line, sizeof line, "%-4s %-28s deviation %.3e  tolerance %.3e", s.passed ? "PASS" : "FAIL",
                  s.name.c_str(), s.deviation, s.tolerance);
    out << line;
    if (!s.detail.empty()) out << "  " << s.detail;
    out << '\n';
  }
  std::size_t failed = 0;
  for (const SuiteResult& s : suites) failed += !s.passed;
  out << (failed == 0 ? "all " : "") << suites.size() - failed << "/" << suites.size() << " suites passed\n";
}

SuiteResult check_projector(std::uint64_t seed, int instances_per_k) {
  SuiteResult r{"projector", true, 0.0, 1e-12, {}};
  double worst_trace = 0.0;
  std::uint64_t index = 0;
  for (int k = 2; k <= 6; ++k) {
    for (int i = 0; i < instances_per_k; ++i) {
      const ChannelSet<double> ch = instance(seed, kProjector, index++, k);
      const CMatrixXd psi = projection_matrix(ch.h_jb);
      const double hermitian = max_abs(psi - psi.adjoint());
      const double idempotent = max_abs(psi * psi - psi);
      const double annihilates = (psi * ch.h_jb).cwiseAbs().maxCoeff();
      const double vs_oracle = max_abs(psi - oracle::complement_projector(ch.h_jb));
      r.deviation = std::max({r.deviation, hermitian, idempotent, annihilates, vs_oracle});
      worst_trace = std::max(worst_trace, std::abs(psi.trace().real() - (k - 1)));
    }
  }
  r.passed = r.deviation <= r.tolerance && worst_trace <= 1e-12;
  r.detail = format("trace error %.3e", worst_trace);
  return r;
}

SuiteResult check_beamformer(std::uint64_t seed, int instances_per_k, std::int64_t competitors) {
  // deviation: worst relative excess of a sampled competitor over the optimum.
  SuiteResult r{"beamformer-optimality", true, -1.0, 1e-12, {}};
  double worst_null = 0.0, worst_norm = 0.0, worst_identity = 0.0, worst_phase = 0.0;
  std::uint64_t index = 0;
  for (int k = 2; k <= 6; ++k) {
    for (int i = 0; i < instances_per_k; ++i, ++index) {
      const ChannelSet<double> ch = instance(seed, kBeamformer, index, k);
      const BeamWeights<double> w = optimal_weights(ch.h_jb, ch.h_je);
      const double g = jamming_gain(w, ch.h_je);
      worst_null = std::max(worst_null, std::abs(w.g.dot(ch.h_jb)));
      worst_norm = std::max(worst_norm, std::abs(w.g.squaredNorm() - 1.0));
      const double projected = (projection_matrix(ch.h_jb) * ch.h_je).squaredNorm();
      worst_identity = std::max(worst_identity, std::abs(g - projected) / std::max(1.0, projected));

      const double phi = 2.0 * std::numbers::pi * static_cast<double>(index % 17) / 17.0 + 0.3;
      const CVectorXd rotated = ch.h_je * std::polar(1.0, phi);
      const double g_rot = jamming_gain(optimal_weights(ch.h_jb, rotated), rotated);
      worst_phase = std::max(worst_phase, std::abs(g_rot - g) / std::max(1.0, g));

      const double sampled =
          oracle::sampled_null_space_max_gain(ch.h_jb, ch.h_je, competitors, seed * 1000003ULL + index);
      r.deviation = std::max(r.deviation, (sampled - g) / g);
    }
  }
  r.passed = r.deviation <= r.tolerance && worst_null <= 1e-10 && worst_norm <= 1e-12 && worst_identity <= 1e-12 &&
             worst_phase <= 1e-12;
  r.detail = format("null %.3e  norm %.3e  ", worst_null, worst_norm) +
             format("identity %.3e  phase %.3e", worst_identity, worst_phase);
  return r;
}

SuiteResult check_precoder(std::uint64_t seed, int instances_per_k) {
  SuiteResult r{"precoder", true, 0.0, 1e-12, {}};
  double worst_null = 0.0;
  std::uint64_t index = 0;
  for (int k = 2; k <= 6; ++k) {
    for (int i = 0; i < instances_per_k; ++i, ++index) {
      const ChannelSet<double> ch = instance(seed, kPrecoder, index, k);
      const Precoder<double> pre = null_space_precoder(ch.h_jb);
      const CMatrixXd gram = pre.G.adjoint() * pre.G;
      r.deviation = std::max(r.deviation, max_abs(gram - CMatrixXd::Identity(k - 1, k - 1)));
      worst_null = std::max(worst_null, (ch.h_jb.adjoint() * pre.G).norm());
      CounterRng rng = RandomStream(seed).substream(kPrecoder).substream(1).draw(index);
      const CVectorXd noise = artificial_noise(pre, rng);
      worst_null = std::max(worst_null, std::abs(ch.h_jb.dot(noise)));
    }
  }
  r.passed = r.deviation <= r.tolerance && worst_null <= 1e-10;
  r.detail = format("null at Bob %.3e", worst_null);
  return r;
}

SuiteResult check_secrecy_clipping(std::uint64_t seed, int draws) {
  SuiteResult r{"secrecy-clipping", true, 0.0, 0.0, {}};
  int condition_mismatch = 0;
  int bound_violations = 0;
  const std::vector<SystemParams> scenarios = rate_scenarios();
  for (int i = 0; i < draws; ++i) {
    const SystemParams& p = scenarios[static_cast<std::size_t>(i) % scenarios.size()];
    const ChannelSet<double> ch = instance(seed, kClipping, static_cast<std::uint64_t>(i), p.k_active);
    CounterRng rng = RandomStream(seed).substream(kClipping).substream(1).draw(static_cast<std::uint64_t>(i));
    const double alpha = 1.0 - rng.uniform();  // (0, 1]
    const SlotGains<double> s = slot_gains(ch);
    for (const bool jammed : {true, false}) {
      const SlotRates<double> rates = jammed ? jammed_rates(s, p, alpha) : unjammed_rates(s, p, alpha);
      const bool condition = jammed ? s.theta_ab > s.theta_ae / (1.0 + p.snr_j * s.jam_gain / alpha)
                                    : s.theta_ab > s.theta_ae;
      const double expected = condition ? rates.rate_ab - rates.rate_ae : 0.0;
      r.deviation = std::max(r.deviation, std::abs(rates.secrecy - std::max(expected, 0.0)));
      condition_mismatch += condition != (rates.secrecy > 0.0);
      bound_violations += rates.secrecy > rates.rate_ab || rates.rate_ab < 0.0 || rates.rate_ae < 0.0;
    }
  }
  r.passed = r.deviation <= r.tolerance && condition_mismatch == 0 && bound_violations == 0;
  r.detail = "condition mismatches " + std::to_string(condition_mismatch) + "  bound violations " +
             std::to_string(bound_violations);
  return r;
}

SuiteResult check_jamming_dominance(std::uint64_t seed, int draws) {
  // deviation: largest amount by which unjammed secrecy exceeds jammed.
  SuiteResult r{"jamming-dominance", true, 0.0, 0.0, {}};
  const std::vector<SystemParams> scenarios = rate_scenarios();
  for (int i = 0; i < draws; ++i) {
    const SystemParams& p = scenarios[static_cast<std::size_t>(i) % scenarios.size()];
    const SlotGains<double> s = slot_gains(instance(seed, kDominance, static_cast<std::uint64_t>(i), p.k_active));
    for (const double alpha : {0.05, 0.3, 0.7, 1.0}) {
      r.deviation = std::max(r.deviation, unjammed_rates(s, p, alpha).secrecy - jammed_rates(s, p, alpha).secrecy);
    }
    r.deviation = std::max(r.deviation, best_rates(s, p, false).secrecy - best_rates(s, p, true).secrecy);
  }
  r.passed = r.deviation <= r.tolerance;
  return r;
}

SuiteResult check_alpha_optimizer(std::uint64_t seed, int instances, int dense_points) {
  SuiteResult r{"alpha-optimizer", true, 0.0, 1e-6, {}};
  int below_baseline = 0;
  const std::vector<SystemParams> scenarios = rate_scenarios();
  for (int i = 0; i < instances; ++i) {
    const SystemParams& p = scenarios[static_cast<std::size_t>(i) % scenarios.size()];
    const int k = 2 + (i / static_cast<int>(scenarios.size())) % 5;
    const SlotGains<double> s = slot_gains(instance(seed, kAlpha, static_cast<std::uint64_t>(i), k));
    for (const bool jammed : {true, false}) {
      auto fn = [&](double a) { return jammed ? jammed_rates(s, p, a).secrecy : unjammed_rates(s, p, a).secrecy; };
      const AlphaOptimum opt = optimize_alpha(fn, p.alpha_grid);
      const double dense = oracle::dense_grid_max(fn, dense_points);
      r.deviation = std::max(r.deviation, std::abs(opt.secrecy - std::max(dense, 0.0)));
      below_baseline += opt.secrecy < fn(1.0);
    }
  }
  r.passed = r.deviation <= r.tolerance && below_baseline == 0;
  r.detail = "below alpha=1 baseline " + std::to_string(below_baseline);
  return r;
}

SuiteResult check_markov_closed_form(const SteadyStateFn& steady_state) {
  SuiteResult r{"markov-closed-form", true, 0.0, 1e-10, {}};
  int unit_ratio_cases = 0;
  double worst_sum = 0.0;
  for (int li = 1; li <= 9; ++li) {
    for (int mi = 1; mi <= 9; ++mi) {
      const double lambda = li / 10.0;
      const double mu = mi / 10.0;
      unit_ratio_cases += chain_ratio(lambda, mu) == 1.0;
      for (const int cap : {1, 2, 5, 10, 50}) {
        const Eigen::VectorXd closed = steady_state(lambda, mu, cap).steady;
        const Eigen::VectorXd solved =
            oracle::stationary_distribution(oracle::battery_transition_matrix(lambda, mu, cap));
        r.deviation = std::max(r.deviation, (closed - solved).cwiseAbs().maxCoeff());
        worst_sum = std::max(worst_sum, std::abs(closed.sum() - 1.0));
      }
    }
  }
  r.passed = r.deviation <= r.tolerance && worst_sum <= 1e-12 && unit_ratio_cases > 0;
  r.detail = "eta=1 cases " + std::to_string(unit_ratio_cases) + format("  normalization %.3e", worst_sum);
  return r;
}

SuiteResult check_large_capacity_limit(const SteadyStateFn& steady_state) {
  SuiteResult r{"large-capacity-limit", true, 0.0, 1e-6, {}};
  for (int li = 1; li <= 9; ++li) {
    for (int mi = 1; mi <= 9; ++mi) {
      const double lambda = li / 10.0;
      const double mu = mi / 10.0;
      if (std::abs(lambda - mu) < 0.05) continue;
      const double nu0 = steady_state(lambda, mu, 1000).empty_prob();
      r.deviation = std::max(r.deviation, std::abs(nu0 - empty_prob_large_capacity(lambda, mu)));
    }
  }
  r.passed = r.deviation <= r.tolerance;
  return r;
}

SuiteResult check_geo_d1_empty(std::uint64_t seed, std::int64_t slots) {
  SuiteResult r{"geo-d1-empty", true, 0.0, 0.005, {}};
  for (const double lambda : {0.2, 0.5, 0.8}) {
    CounterRng rng(RandomStream(seed).substream(kGeoD1).substream(static_cast<std::uint64_t>(lambda * 100)).key());
    BatteryState battery{0, 10};
    std::int64_t empty = 0;
    for (std::int64_t t = 0; t < slots; ++t) {
      empty += battery.level == 0;
      battery = step(battery, rng.uniform() < lambda, battery.level > 0);
    }
    const double measured = static_cast<double>(empty) / static_cast<double>(slots);
    r.deviation = std::max(r.deviation, std::abs(measured - geo_d1_empty_prob(lambda)));
  }
  r.passed = r.deviation <= r.tolerance;
  return r;
}

SuiteResult check_simulator_determinism(std::uint64_t seed) {
  SuiteResult r{"simulator-determinism", true, 0.0, 0.0, {}};
  SystemParams p;
  p.seed = seed;
  SimOptions options;
  options.n_slots = 3000;
  options.warmup = 200;
  const RandomStream stream(seed);
  int mismatches = 0;
  for (const int replicas : {1, 3}) {
    options.replicas = replicas;
    mismatches += !(simulate(p, options, stream) == simulate(p, options, stream));
  }
  const RegimeEstimate a = estimate_regime_means_and_beta(p, 500, stream);
  const RegimeEstimate b = estimate_regime_means_and_beta(p, 500, stream);
  mismatches += a.mean_jammed != b.mean_jammed || a.mean_unjammed != b.mean_unjammed || a.beta_hat != b.beta_hat;
  const SimResult other = simulate(p, options, RandomStream(seed + 1));
  const bool seed_matters = !(other == simulate(p, options, stream));
  r.deviation = mismatches;
  r.passed = mismatches == 0 && seed_matters;
  r.detail = seed_matters ? "distinct seeds differ" : "distinct seeds gave identical results";
  return r;
}

SuiteResult check_special_case_predictors(std::uint64_t seed, std::int64_t slots) {
  // deviation: worst |simulated - predicted| as a fraction of the joint 95% half-width.
  SuiteResult r{"special-case-predictors", true, 0.0, 1.0, {}};
  struct Case {
    double lambda_a, lambda_j;
  };
  for (const Case c : {Case{1.0, 0.5}, Case{0.5, 1.0}}) {
    SystemParams p;
    p.seed = seed;
    p.lambda_a = c.lambda_a;
    p.lambda_j = c.lambda_j;
    const RandomStream stream = RandomStream(seed).substream(kPredictors);
    const SimResult sim = simulate(p, slots, stream);
    const RegimeEstimate est = estimate_regime_means_and_beta(p, slots, stream);
    const Prediction pred =
        c.lambda_a == 1.0 ? predict_alice_saturated(est, c.lambda_j) : predict_jimmy_saturated(est, c.lambda_a);
    const double bound = std::hypot(sim.ci_halfwidth, pred.halfwidth);
    r.deviation = std::max(r.deviation, std::abs(sim.mu_a - pred.value) / bound);
  }
  r.passed = r.deviation <= r.tolerance;
  return r;
}

ValidationReport run_validate(const ValidationOptions& options) {
  const std::uint64_t seed = options.seed;
  ValidationReport report;
  report.suites.push_back(check_projector(seed, 40));
  report.suites.push_back(check_beamformer(seed, 20, 20000));
  report.suites.push_back(check_precoder(seed, 40));
  report.suites.push_back(check_secrecy_clipping(seed, 10000));
  report.suites.push_back(check_jamming_dominance(seed, 10000));
  report.suites.push_back(check_alpha_optimizer(seed, 20, 100000));
  report.suites.push_back(check_markov_closed_form(options.steady_state));
  report.suites.push_back(check_large_capacity_limit(options.steady_state));
  report.suites.push_back(check_geo_d1_empty(seed, 1000000));
  report.suites.push_back(check_simulator_determinism(seed));
  report.suites.push_back(check_special_case_predictors(seed, 20000));
  return report;
}

}  // namespace jamsec
