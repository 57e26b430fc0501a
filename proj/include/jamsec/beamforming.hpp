#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "jamsec/types.hpp"

namespace jamsec {

/// Unit-norm jammer weights g. The artificial noise seen at a receiver with
/// channel h is g^H h.
template <typename Scalar>
struct BeamWeights {
  CVector<Scalar> g;
};

/// K x (K-1) matrix with orthonormal columns, each orthogonal to h_jb.
template <typename Scalar>
struct Precoder {
  CMatrix<Scalar> G;
};

namespace detail {

template <typename Derived>
using RealOf = typename Eigen::NumTraits<typename Derived::Scalar>::Real;

template <typename Derived>
RealOf<Derived> checked_energy(const Eigen::MatrixBase<Derived>& h_jb) {
  const auto energy = h_jb.squaredNorm();
  if (!(energy > 0) || !std::isfinite(energy)) {
    throw DegenerateChannelError("jammer-to-Bob channel has zero (or non-finite) norm");
  }
  return energy;
}

}  // namespace detail

/// Orthogonal projector onto the complement of span{h_jb}:
/// Psi = I - h_jb h_jb^H / ||h_jb||^2.
template <typename Derived>
[[nodiscard]] CMatrix<detail::RealOf<Derived>> projection_matrix(const Eigen::MatrixBase<Derived>& h_jb) {
  using Real = detail::RealOf<Derived>;
  const Real energy = detail::checked_energy(h_jb);
  const Eigen::Index k = h_jb.size();
  CMatrix<Real> psi = CMatrix<Real>::Identity(k, k);
  psi.noalias() -= (h_jb * h_jb.adjoint()) / energy;
  return psi;
}

/// Psi * h_je evaluated without forming Psi.
template <typename DerivedB, typename DerivedE>
[[nodiscard]] CVector<detail::RealOf<DerivedB>> project_out(const Eigen::MatrixBase<DerivedB>& h_jb,
                                                             const Eigen::MatrixBase<DerivedE>& h_je) {
  const auto energy = detail::checked_energy(h_jb);
  return h_je - h_jb * (h_jb.dot(h_je) / energy);
}

/// |g^H h_je|^2.
template <typename Scalar, typename Derived>
[[nodiscard]] Scalar jamming_gain(const BeamWeights<Scalar>& w, const Eigen::MatrixBase<Derived>& h_je) {
  return std::norm(w.g.dot(h_je));
}

/// Bob-nulling weights that maximize the jamming power at Eve: the normalized
/// projection of h_je onto the orthogonal complement of h_jb. The result does
/// not depend on the transmission-time fraction.
///
/// Throws DegenerateChannelError for h_jb = 0 and DegenerateAlignmentError when
/// ||Psi h_je|| <= 1e-12 ||h_je||.
template <typename DerivedB, typename DerivedE>
[[nodiscard]] BeamWeights<detail::RealOf<DerivedB>> optimal_weights(const Eigen::MatrixBase<DerivedB>& h_jb,
                                                                    const Eigen::MatrixBase<DerivedE>& h_je) {
  using Real = detail::RealOf<DerivedB>;
  CVector<Real> projected = project_out(h_jb, h_je);
  const Real norm = projected.norm();
  const Real scale = h_je.norm();
  if (!(norm > Real(1e-12) * scale)) {
    throw DegenerateAlignmentError("Eve's jammer channel is parallel to Bob's; no jamming gain is achievable");
  }
  return BeamWeights<Real>{projected / norm};
}

/// Jamming gain of the optimal weights, with degenerate alignment mapped to
/// zero gain. Equals ||Psi h_je||^2.
template <typename DerivedB, typename DerivedE>
[[nodiscard]] detail::RealOf<DerivedB> optimal_jamming_gain(const Eigen::MatrixBase<DerivedB>& h_jb,
                                                            const Eigen::MatrixBase<DerivedE>& h_je) {
  try {
    return jamming_gain(optimal_weights(h_jb, h_je), h_je);
  } catch (const DegenerateAlignmentError&) {
    return 0;
  }
}

/// Artificial-noise precoder for the case where Eve's CSI is unknown. The
/// columns are the trailing K-1 columns of the Householder reflector that maps
/// h_jb onto the first coordinate axis, so h_jb^H G = 0 (the received noise at
/// Bob vanishes).
template <typename Derived>
[[nodiscard]] Precoder<detail::RealOf<Derived>> null_space_precoder(const Eigen::MatrixBase<Derived>& h_jb) {
  using Real = detail::RealOf<Derived>;
  const Eigen::Index k = h_jb.size();
  if (k < 2) throw DegenerateChannelError("null-space precoder needs at least two antennas");
  const Real norm = std::sqrt(detail::checked_energy(h_jb));

  CVector<Real> w = h_jb / norm;
  const Complex<Real> u0 = w[0];
  const Real mag = std::abs(u0);
  const Complex<Real> phase = mag > 0 ? u0 / mag : Complex<Real>(1);
  w[0] += phase;  // sign choice avoids cancellation
  const Real w_energy = w.squaredNorm();

  CMatrix<Real> reflector = CMatrix<Real>::Identity(k, k);
  reflector.noalias() -= (Real(2) / w_energy) * (w * w.adjoint());
  return Precoder<Real>{reflector.rightCols(k - 1)};
}

/// Draws one artificial-noise vector G * v with v ~ CN(0, I_{K-1}).
template <typename Scalar, typename Urbg>
[[nodiscard]] CVector<Scalar> artificial_noise(const Precoder<Scalar>& precoder, Urbg& rng) {
  std::normal_distribution<Scalar> normal(Scalar(0), std::sqrt(Scalar(0.5)));
  CVector<Scalar> v(precoder.G.cols());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const Scalar re = normal(rng);
    const Scalar im = normal(rng);
    v[i] = Complex<Scalar>(re, im);
  }
  return precoder.G * v;
}

}  // namespace jamsec
