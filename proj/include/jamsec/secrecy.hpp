#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "jamsec/beamforming.hpp"
#include "jamsec/channel.hpp"
#include "jamsec/params.hpp"

namespace jamsec {

/// Rates of one slot at a given transmission-time fraction, in bits/sec/Hz.
template <typename Scalar>
struct SlotRates {
  Scalar alpha = 1;
  Scalar rate_ab = 0;
  Scalar rate_ae = 0;
  Scalar secrecy = 0;
  bool jammed = false;
};

namespace detail {

template <typename Scalar>
Scalar log2_1p(Scalar x) {
  return std::log1p(x) / std::numbers::ln2_v<Scalar>;
}

}  // namespace detail

/// alpha * log2(1 + snr_a * theta_ab / alpha); zero at alpha = 0 by continuity.
template <typename Scalar>
[[nodiscard]] Scalar rate_ab(Scalar snr_a, Scalar alpha, Scalar theta_ab) {
  if (!(alpha > 0)) return 0;
  return alpha * detail::log2_1p(snr_a * theta_ab / alpha);
}

/// Eve's rate while the jammer is active. Both powers scale with 1/alpha, so
/// the SINR (snr_a theta/alpha) / (1 + snr_j G/alpha) is evaluated as
/// snr_a theta / (alpha + snr_j G).
template <typename Scalar>
[[nodiscard]] Scalar rate_ae_jammed(Scalar snr_a, Scalar snr_j, Scalar alpha, Scalar theta_ae, Scalar jam_gain) {
  if (!(alpha > 0)) return 0;
  const Scalar interference = snr_j * jam_gain;
  if (std::isinf(interference)) return 0;
  return alpha * detail::log2_1p(snr_a * theta_ae / (alpha + interference));
}

/// The scalar inputs a slot's rates depend on.
template <typename Scalar>
struct SlotGains {
  Scalar theta_ab = 0;
  Scalar theta_ae = 0;
  Scalar jam_gain = 0;
};

template <typename Scalar>
[[nodiscard]] SlotGains<Scalar> slot_gains(const ChannelSet<Scalar>& ch) {
  return {gain(ch.h_ab), gain(ch.h_ae), optimal_jamming_gain(ch.h_jb, ch.h_je)};
}

/// Jammed-slot rates from precomputed gains. The secrecy rate is exactly zero
/// unless theta_ab > theta_ae / (1 + snr_j G / alpha).
template <typename Scalar>
[[nodiscard]] SlotRates<Scalar> jammed_rates(const SlotGains<Scalar>& s, const SystemParams& p, Scalar alpha) {
  SlotRates<Scalar> r;
  r.alpha = alpha;
  r.jammed = true;
  r.rate_ab = rate_ab<Scalar>(p.snr_a, alpha, s.theta_ab);
  r.rate_ae = rate_ae_jammed<Scalar>(p.snr_a, p.snr_j, alpha, s.theta_ae, s.jam_gain);
  const bool positive = alpha > 0 && s.theta_ab * (alpha + p.snr_j * s.jam_gain) > s.theta_ae * alpha;
  r.secrecy = positive ? std::max<Scalar>(r.rate_ab - r.rate_ae, 0) : Scalar(0);
  return r;
}

/// Rates with the jammer silent; positive secrecy iff theta_ab > theta_ae.
template <typename Scalar>
[[nodiscard]] SlotRates<Scalar> unjammed_rates(const SlotGains<Scalar>& s, const SystemParams& p, Scalar alpha) {
  SlotRates<Scalar> r;
  r.alpha = alpha;
  r.jammed = false;
  r.rate_ab = rate_ab<Scalar>(p.snr_a, alpha, s.theta_ab);
  r.rate_ae = rate_ab<Scalar>(p.snr_a, alpha, s.theta_ae);
  const bool positive = alpha > 0 && s.theta_ab > s.theta_ae;
  r.secrecy = positive ? std::max<Scalar>(r.rate_ab - r.rate_ae, 0) : Scalar(0);
  return r;
}

template <typename Scalar>
[[nodiscard]] SlotRates<Scalar> secrecy_rate_jammed(const ChannelSet<Scalar>& ch, const BeamWeights<Scalar>& w,
                                                    const SystemParams& p, Scalar alpha) {
  const SlotGains<Scalar> s{gain(ch.h_ab), gain(ch.h_ae), jamming_gain(w, ch.h_je)};
  return jammed_rates(s, p, alpha);
}

template <typename Scalar>
[[nodiscard]] SlotRates<Scalar> secrecy_rate_unjammed(const ChannelSet<Scalar>& ch, const SystemParams& p,
                                                      Scalar alpha) {
  const SlotGains<Scalar> s{gain(ch.h_ab), gain(ch.h_ae), Scalar(0)};
  return unjammed_rates(s, p, alpha);
}

struct AlphaOptimum {
  double alpha = 1.0;
  double secrecy = 0.0;
};

/// Maximizes a per-alpha secrecy evaluator over (0, 1].
///
/// A uniform grid {1/n, 2/n, ..., 1} locates the best cell (smallest alpha on
/// ties), then golden-section search refines inside the neighbouring cells to
/// a bracket width of 1e-6. The refined point replaces the grid point only if
/// it is strictly better, so the result never falls below any grid value,
/// including alpha = 1. If every grid value is zero, alpha = 2^-k / n is
/// probed down to kMinAlpha, since the jammed rate can be positive only below
/// the first grid point. When no alpha yields a positive rate the slot is idle
/// and alpha = 1 is reported.
/// Smallest bandwidth fraction considered; matches the refinement resolution.
inline constexpr double kMinAlpha = 1e-6;

template <typename RateFn>
[[nodiscard]] AlphaOptimum optimize_alpha(RateFn&& rate_fn, int grid_points) {
  if (grid_points < 2) throw ConfigError("optimize_alpha needs at least two grid points");
  const double step = 1.0 / grid_points;

  double best_x = 1.0;
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 1; i <= grid_points; ++i) {
    const double v = rate_fn(i * step);
    if (v > best) {
      best = v;
      best_x = i * step;
    }
  }
  double lo = best_x - step;
  double hi = std::min(1.0, best_x + step);
  if (!(best > 0)) {
    for (int k = 1; std::ldexp(step, -k) >= kMinAlpha; ++k) {
      const double x = std::ldexp(step, -k);
      const double v = rate_fn(x);
      if (v > best) {
        best = v;
        best_x = x;
      }
    }
    if (!(best > 0)) return {1.0, 0.0};
    lo = std::max(0.5 * best_x, kMinAlpha);
    hi = 2.0 * best_x;
  }

  constexpr double inv_phi = 0.6180339887498949;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = rate_fn(x1);
  double f2 = rate_fn(x2);
  while (hi - lo > std::min(1e-6, 1e-3 * best_x)) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = rate_fn(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = rate_fn(x1);
    }
  }
  const double x = f1 >= f2 ? x1 : x2;
  const double fx = std::max(f1, f2);

  // Rounding can make a flat objective look marginally better off-grid; demand
  // a real improvement before leaving the grid point.
  if (x > 0 && fx > best + 1e-12 * best) return {x, fx};
  return {best_x, best};
}

/// Per-slot optimum in one jammer regime, honouring alpha_fixed.
template <typename Scalar>
[[nodiscard]] SlotRates<Scalar> best_rates(const SlotGains<Scalar>& s, const SystemParams& p, bool jammed) {
  auto eval = [&](Scalar alpha) { return jammed ? jammed_rates(s, p, alpha) : unjammed_rates(s, p, alpha); };
  if (p.alpha_fixed) return eval(static_cast<Scalar>(*p.alpha_fixed));
  const AlphaOptimum opt = optimize_alpha([&](double a) { return double(eval(Scalar(a)).secrecy); }, p.alpha_grid);
  return eval(static_cast<Scalar>(opt.alpha));
}

}  // namespace jamsec
