#pragma once

#include <cstdint>
#include <optional>

#include "jamsec/params.hpp"
#include "jamsec/rng.hpp"
#include "jamsec/secrecy.hpp"

namespace jamsec {

/// Sub-stream ids under a replica's stream.
enum class StreamId : std::uint64_t { channels = 1, arrivals = 2 };

struct SimOptions {
  std::int64_t n_slots = 40000;  ///< measured slots, after warm-up, summed over replicas
  int replicas = 1;
  int min_batches = 30;
  /// Alice (and Jimmy, when both are charged) spend a packet in every slot
  /// they are able to transmit, even when the secrecy condition fails.
  bool deplete_on_insecure = false;
  /// Slots discarded per replica; defaults to max(10 cap_a, 10 cap_j, 1000).
  std::optional<std::int64_t> warmup;
};

struct SimResult {
  double mu_a = 0.0;          ///< secure bits/sec/Hz per slot
  double p_joint_on = 0.0;    ///< Pr{B_A > 0, B_J > 0}
  double p_a_on_j_off = 0.0;  ///< Pr{B_A > 0, B_J = 0}
  double p_a_on = 0.0;
  double p_j_on = 0.0;
  double mu_b_a = 0.0;  ///< packets served per slot in which B_A > 0
  double mu_b_j = 0.0;  ///< packets served per slot in which B_J > 0
  /// Optimized jammed / unjammed secrecy averaged over every measured slot's
  /// channel, whatever the battery states were.
  double mean_rate_jammed = 0.0;
  double mean_rate_unjammed = 0.0;
  double beta_hat = 0.0;  ///< fraction of slots meeting the jammed secrecy condition
  std::int64_t n_slots = 0;
  int n_batches = 0;
  double ci_halfwidth = 0.0;  ///< 95% batch-means half-width on mu_a

  bool operator==(const SimResult&) const = default;
};

/// Best jammed and unjammed rates of one channel realization.
struct SlotOutcome {
  SlotRates<double> jammed;
  SlotRates<double> unjammed;
};

[[nodiscard]] SlotOutcome evaluate_slot(const ChannelSet<double>& ch, const SystemParams& p);

/// Channel realization used in slot `index` of replica `replica`.
[[nodiscard]] ChannelSet<double> slot_channels(const RandomStream& stream, int replica, std::int64_t index,
                                               int k_active);

/// Slot-by-slot simulation of the two coupled batteries. Both batteries start
/// empty. Each slot: draw channels; if both batteries are charged Alice sends
/// at the optimized jammed secrecy rate and each battery loses a packet when
/// that rate is positive; if only Alice is charged she sends at the unjammed
/// secrecy rate; otherwise the slot is idle. Bernoulli arrivals follow.
///
/// Replicas use independent sub-streams and may run concurrently; the merge is
/// ordered, so results depend only on (seed stream, replicas, n_slots).
[[nodiscard]] SimResult simulate(const SystemParams& p, const SimOptions& options, const RandomStream& stream);
[[nodiscard]] SimResult simulate(const SystemParams& p, std::int64_t n_slots, const RandomStream& stream);

struct RegimeEstimate {
  double mean_jammed = 0.0;
  double mean_unjammed = 0.0;
  double beta_hat = 0.0;
  double se_jammed = 0.0;
  double se_unjammed = 0.0;
  double se_beta = 0.0;
  /// Covariance of the sample means of (jammed secrecy, unjammed secrecy,
  /// secure indicator).
  Eigen::Matrix3d mean_covariance = Eigen::Matrix3d::Zero();
  std::int64_t n_draws = 0;
};

/// Full-battery Monte Carlo of the regime means and of beta over i.i.d.
/// channel draws. Draw i reuses the channels of replica 0, slot i, of
/// simulate() on the same stream.
[[nodiscard]] RegimeEstimate estimate_regime_means_and_beta(const SystemParams& p, std::int64_t n_draws,
                                                            const RandomStream& stream);

/// min(lambda / beta, 1), with beta = 0 read as saturated.
[[nodiscard]] double saturation_fraction(double lambda, double beta);

/// Alice always charged, large jammer battery:
/// C_jammed min(lambda_j/beta, 1) + C_unjammed (1 - min(lambda_j/beta, 1)).
[[nodiscard]] double predict_mu_a_alice_saturated(double mean_jammed, double mean_unjammed, double lambda_j,
                                                  double beta);

/// Jimmy always charged, large source battery: min(lambda_a/beta, 1) C_jammed.
[[nodiscard]] double predict_mu_a_jimmy_saturated(double mean_jammed, double lambda_a, double beta);

/// Both batteries as Geo/D/1 queues with unit service:
/// lambda_a (C_jammed lambda_j + C_unjammed (1 - lambda_j)).
[[nodiscard]] double predict_mu_a_geo_d1(double mean_jammed, double mean_unjammed, double lambda_a,
                                         double lambda_j);

/// A closed-form prediction fed by a RegimeEstimate, with the 95% half-width
/// propagated from the estimate's covariance (first-order delta method).
struct Prediction {
  double value = 0.0;
  double halfwidth = 0.0;
};

[[nodiscard]] Prediction predict_alice_saturated(const RegimeEstimate& est, double lambda_j);
[[nodiscard]] Prediction predict_jimmy_saturated(const RegimeEstimate& est, double lambda_a);

/// Two-sided 95% Student-t quantile.
[[nodiscard]] double t_quantile_975(int dof);

}  // namespace jamsec
