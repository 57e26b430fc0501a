#pragma once

// Reference computations that share no code path with the closed forms they
// check. Used by the unit tests and by `jamsec validate`.

#include <cstdint>
#include <limits>

#include "jamsec/types.hpp"

namespace jamsec::oracle {

/// Row-stochastic transition matrix of the battery chain (departure, then
/// arrival, overflow dropped).
[[nodiscard]] Eigen::MatrixXd battery_transition_matrix(double lambda, double mu, int cap);

/// Stationary distribution pi = pi P by a dense LU solve of the balance
/// equations with one equation replaced by the normalization.
[[nodiscard]] Eigen::VectorXd stationary_distribution(const Eigen::MatrixXd& transition);

/// Orthonormal basis of span{h}^perp from Eigen's Householder QR.
[[nodiscard]] CMatrixXd complement_basis(const CVectorXd& h);

/// Projector onto span{h}^perp built as N N^H from complement_basis.
[[nodiscard]] CMatrixXd complement_projector(const CVectorXd& h);

/// Largest |v^H h_je|^2 over `samples` random unit vectors v with
/// v^H h_jb = 0. Coordinates in the complement basis are drawn uniformly from
/// the unit cube and normalized.
[[nodiscard]] double sampled_null_space_max_gain(const CVectorXd& h_jb, const CVectorXd& h_je,
                                                 std::int64_t samples, std::uint64_t seed);

/// Max of rate_fn over the uniform grid {1/n, ..., 1}.
template <typename RateFn>
[[nodiscard]] double dense_grid_max(RateFn&& rate_fn, int n) {
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 1; i <= n; ++i) {
    const double v = rate_fn(static_cast<double>(i) / n);
    if (v > best) best = v;
  }
  return best;
}

}  // namespace jamsec::oracle
