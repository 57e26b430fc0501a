#include "jamsec/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

#include "jamsec/battery.hpp"

namespace jamsec {

namespace {

struct ReplicaTally {
  std::int64_t slots = 0;
  double secrecy = 0.0;
  std::int64_t joint_on = 0;
  std::int64_t a_only = 0;
  std::int64_t a_on = 0;
  std::int64_t j_on = 0;
  std::int64_t served_a = 0;
  std::int64_t served_j = 0;
  double sum_jammed = 0.0;
  double sum_unjammed = 0.0;
  std::int64_t secure_jammed = 0;
  std::vector<double> batch_means;
};

std::int64_t default_warmup(const SystemParams& p) {
  return std::max<std::int64_t>({10LL * p.cap_a, 10LL * p.cap_j, 1000});
}

ReplicaTally run_replica(const SystemParams& p, const SimOptions& options, const RandomStream& stream, int replica,
                         std::int64_t n_slots, int n_batches) {
  const std::int64_t warmup = options.warmup.value_or(default_warmup(p));
  const RandomStream arrivals = stream.substream(static_cast<std::uint64_t>(replica))
                                    .substream(static_cast<std::uint64_t>(StreamId::arrivals));

  ReplicaTally tally;
  tally.batch_means.reserve(static_cast<std::size_t>(n_batches));
  BatteryState alice{0, p.cap_a};
  BatteryState jimmy{0, p.cap_j};

  int batch = 0;
  double batch_sum = 0.0;
  std::int64_t batch_start = 0;
  auto batch_end = [&](int b) { return (static_cast<std::int64_t>(b) + 1) * n_slots / n_batches; };

  for (std::int64_t t = 0; t < warmup + n_slots; ++t) {
    const SlotOutcome slot = evaluate_slot(slot_channels(stream, replica, t, p.k_active), p);

    const bool a_on = alice.level > 0;
    const bool j_on = jimmy.level > 0;
    double secrecy = 0.0;
    bool depart_a = false;
    bool depart_j = false;
    if (a_on && j_on) {
      if (slot.jammed.secrecy > 0.0 || options.deplete_on_insecure) {
        secrecy = slot.jammed.secrecy;
        depart_a = depart_j = true;
      }
    } else if (a_on) {
      if (slot.unjammed.secrecy > 0.0 || options.deplete_on_insecure) {
        secrecy = slot.unjammed.secrecy;
        depart_a = true;
      }
    }

    CounterRng arrival_rng = arrivals.draw(static_cast<std::uint64_t>(t));
    const bool arrive_a = arrival_rng.uniform() < p.lambda_a;
    const bool arrive_j = arrival_rng.uniform() < p.lambda_j;
    alice = step(alice, arrive_a, depart_a);
    jimmy = step(jimmy, arrive_j, depart_j);

    if (t < warmup) continue;
    const std::int64_t m = t - warmup;
    ++tally.slots;
    tally.secrecy += secrecy;
    tally.joint_on += a_on && j_on;
    tally.a_only += a_on && !j_on;
    tally.a_on += a_on;
    tally.j_on += j_on;
    tally.served_a += depart_a;
    tally.served_j += depart_j;
    tally.sum_jammed += slot.jammed.secrecy;
    tally.sum_unjammed += slot.unjammed.secrecy;
    tally.secure_jammed += slot.jammed.secrecy > 0.0;

    batch_sum += secrecy;
    if (m + 1 == batch_end(batch)) {
      tally.batch_means.push_back(batch_sum / static_cast<double>(m + 1 - batch_start));
      batch_sum = 0.0;
      batch_start = m + 1;
      ++batch;
    }
  }
  return tally;
}

double ratio(std::int64_t num, std::int64_t den) {
  return den > 0 ? static_cast<double>(num) / static_cast<double>(den) : 0.0;
}

}  // namespace

SlotOutcome evaluate_slot(const ChannelSet<double>& ch, const SystemParams& p) {
  const SlotGains<double> gains = slot_gains(ch);
  return {best_rates(gains, p, true), best_rates(gains, p, false)};
}

ChannelSet<double> slot_channels(const RandomStream& stream, int replica, std::int64_t index, int k_active) {
  CounterRng rng = stream.substream(static_cast<std::uint64_t>(replica))
                       .substream(static_cast<std::uint64_t>(StreamId::channels))
                       .draw(static_cast<std::uint64_t>(index));
  return sample_channels<double>(rng, k_active);
}

SimResult simulate(const SystemParams& p, std::int64_t n_slots, const RandomStream& stream) {
  SimOptions options;
  options.n_slots = n_slots;
  return simulate(p, options, stream);
}

SimResult simulate(const SystemParams& p, const SimOptions& options, const RandomStream& stream) {
  p.validate();
  if (options.n_slots < 1) throw ConfigError("n_slots must be >= 1");
  if (options.replicas < 1) throw ConfigError("replicas must be >= 1");
  if (options.min_batches < 1) throw ConfigError("min_batches must be >= 1");
  if (options.warmup && *options.warmup < 0) throw ConfigError("warmup must be >= 0");

  const int replicas = static_cast<int>(std::min<std::int64_t>(options.replicas, options.n_slots));
  const int batches_each = (options.min_batches + replicas - 1) / replicas;

  std::vector<std::future<ReplicaTally>> jobs;
  jobs.reserve(static_cast<std::size_t>(replicas));
  for (int r = 0; r < replicas; ++r) {
    const std::int64_t n = options.n_slots / replicas + (r < options.n_slots % replicas ? 1 : 0);
    const int batches = static_cast<int>(std::min<std::int64_t>(batches_each, n));
    const auto policy = replicas > 1 ? std::launch::async : std::launch::deferred;
    jobs.push_back(std::async(policy, run_replica, std::cref(p), std::cref(options), std::cref(stream), r, n,
                              batches));
  }

  ReplicaTally total;
  for (auto& job : jobs) {
    ReplicaTally t = job.get();
    total.slots += t.slots;
    total.secrecy += t.secrecy;
    total.joint_on += t.joint_on;
    total.a_only += t.a_only;
    total.a_on += t.a_on;
    total.j_on += t.j_on;
    total.served_a += t.served_a;
    total.served_j += t.served_j;
    total.sum_jammed += t.sum_jammed;
    total.sum_unjammed += t.sum_unjammed;
    total.secure_jammed += t.secure_jammed;
    total.batch_means.insert(total.batch_means.end(), t.batch_means.begin(), t.batch_means.end());
  }

  SimResult res;
  const double n = static_cast<double>(total.slots);
  res.n_slots = total.slots;
  res.mu_a = total.secrecy / n;
  res.p_joint_on = ratio(total.joint_on, total.slots);
  res.p_a_on_j_off = ratio(total.a_only, total.slots);
  res.p_a_on = ratio(total.a_on, total.slots);
  res.p_j_on = ratio(total.j_on, total.slots);
  res.mu_b_a = ratio(total.served_a, total.a_on);
  res.mu_b_j = ratio(total.served_j, total.j_on);
  res.mean_rate_jammed = total.sum_jammed / n;
  res.mean_rate_unjammed = total.sum_unjammed / n;
  res.beta_hat = ratio(total.secure_jammed, total.slots);

  const auto& means = total.batch_means;
  res.n_batches = static_cast<int>(means.size());
  if (means.size() >= 2) {
    double mean = 0.0;
    for (double m : means) mean += m;
    mean /= static_cast<double>(means.size());
    double ss = 0.0;
    for (double m : means) ss += (m - mean) * (m - mean);
    const double b = static_cast<double>(means.size());
    res.ci_halfwidth = t_quantile_975(res.n_batches - 1) * std::sqrt(ss / (b - 1.0) / b);
  } else {
    res.ci_halfwidth = std::numeric_limits<double>::infinity();
  }
  return res;
}

RegimeEstimate estimate_regime_means_and_beta(const SystemParams& p, std::int64_t n_draws,
                                              const RandomStream& stream) {
  p.validate();
  if (n_draws < 1) throw ConfigError("n_draws must be >= 1");

  // Welford updates of the mean and co-moment of (jammed, unjammed, secure).
  Eigen::Vector3d mean = Eigen::Vector3d::Zero();
  Eigen::Matrix3d comoment = Eigen::Matrix3d::Zero();
  for (std::int64_t i = 0; i < n_draws; ++i) {
    const SlotOutcome slot = evaluate_slot(slot_channels(stream, 0, i, p.k_active), p);
    const Eigen::Vector3d x(slot.jammed.secrecy, slot.unjammed.secrecy, slot.jammed.secrecy > 0.0 ? 1.0 : 0.0);
    const Eigen::Vector3d before = x - mean;
    mean += before / static_cast<double>(i + 1);
    comoment.noalias() += before * (x - mean).transpose();
  }

  const double n = static_cast<double>(n_draws);
  RegimeEstimate est;
  est.n_draws = n_draws;
  est.mean_jammed = mean[0];
  est.mean_unjammed = mean[1];
  est.beta_hat = mean[2];
  if (n_draws >= 2) {
    est.mean_covariance = comoment / ((n - 1.0) * n);
  } else {
    est.mean_covariance.setConstant(std::numeric_limits<double>::infinity());
  }
  est.se_jammed = std::sqrt(est.mean_covariance(0, 0));
  est.se_unjammed = std::sqrt(est.mean_covariance(1, 1));
  est.se_beta = std::sqrt(est.mean_covariance(2, 2));
  return est;
}

double saturation_fraction(double lambda, double beta) {
  if (!(beta > 0.0)) return 1.0;
  return std::min(lambda / beta, 1.0);
}

double predict_mu_a_alice_saturated(double mean_jammed, double mean_unjammed, double lambda_j, double beta) {
  const double on = saturation_fraction(lambda_j, beta);
  return mean_jammed * on + mean_unjammed * (1.0 - on);
}

double predict_mu_a_jimmy_saturated(double mean_jammed, double lambda_a, double beta) {
  return saturation_fraction(lambda_a, beta) * mean_jammed;
}

double predict_mu_a_geo_d1(double mean_jammed, double mean_unjammed, double lambda_a, double lambda_j) {
  return lambda_a * (mean_jammed * lambda_j + mean_unjammed * (1.0 - lambda_j));
}

namespace {

// d/dbeta of min(lambda / beta, 1).
double saturation_slope(double lambda, double beta) {
  if (!(beta > 0.0) || lambda >= beta) return 0.0;
  return -lambda / (beta * beta);
}

double delta_halfwidth(const RegimeEstimate& est, const Eigen::Vector3d& gradient) {
  return 1.96 * std::sqrt(std::max(0.0, gradient.dot(est.mean_covariance * gradient)));
}

}  // namespace

Prediction predict_alice_saturated(const RegimeEstimate& est, double lambda_j) {
  const double on = saturation_fraction(lambda_j, est.beta_hat);
  const Eigen::Vector3d gradient(on, 1.0 - on,
                                 (est.mean_jammed - est.mean_unjammed) * saturation_slope(lambda_j, est.beta_hat));
  return {predict_mu_a_alice_saturated(est.mean_jammed, est.mean_unjammed, lambda_j, est.beta_hat),
          delta_halfwidth(est, gradient)};
}

Prediction predict_jimmy_saturated(const RegimeEstimate& est, double lambda_a) {
  const double on = saturation_fraction(lambda_a, est.beta_hat);
  const Eigen::Vector3d gradient(on, 0.0, est.mean_jammed * saturation_slope(lambda_a, est.beta_hat));
  return {predict_mu_a_jimmy_saturated(est.mean_jammed, lambda_a, est.beta_hat), delta_halfwidth(est, gradient)};
}

double t_quantile_975(int dof) {
  if (dof < 1) return std::numeric_limits<double>::infinity();
  const boost::math::students_t dist(dof);
  return boost::math::quantile(dist, 0.975);
}

}  // namespace jamsec
