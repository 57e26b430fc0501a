#pragma once

#include <cmath>
#include <random>

#include "jamsec/types.hpp"

namespace jamsec {

/// One slot of flat-fading coefficients. The jammer vectors cover the active
/// antennas 1..K only.
template <typename Scalar>
struct ChannelSet {
  Complex<Scalar> h_ab;
  Complex<Scalar> h_ae;
  CVector<Scalar> h_jb;
  CVector<Scalar> h_je;

  [[nodiscard]] Eigen::Index k_active() const { return h_jb.size(); }

  [[nodiscard]] bool all_finite() const {
    auto finite = [](const Complex<Scalar>& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
    return finite(h_ab) && finite(h_ae) && h_jb.allFinite() && h_je.allFinite();
  }
};

/// Channel gain |h|^2.
template <typename Scalar>
[[nodiscard]] Scalar gain(const Complex<Scalar>& h) {
  return std::norm(h);
}

/// Draws every coefficient as CN(0, 1). Jammer antennas are drawn as
/// (h_jb[i], h_je[i]) pairs in index order, so for the same engine state the
/// first K antennas agree between any two values of k_active.
template <typename Scalar = double, typename Urbg>
[[nodiscard]] ChannelSet<Scalar> sample_channels(Urbg& rng, int k_active) {
  std::normal_distribution<Scalar> normal(Scalar(0), std::sqrt(Scalar(0.5)));
  auto draw = [&] {
    const Scalar re = normal(rng);
    const Scalar im = normal(rng);
    return Complex<Scalar>(re, im);
  };

  ChannelSet<Scalar> ch;
  ch.h_ab = draw();
  ch.h_ae = draw();
  ch.h_jb.resize(k_active);
  ch.h_je.resize(k_active);
  for (int i = 0; i < k_active; ++i) {
    ch.h_jb[i] = draw();
    ch.h_je[i] = draw();
  }
  return ch;
}

}  // namespace jamsec
