#include "jamsec/oracles.hpp"

#include <algorithm>
#include <complex>

#include "jamsec/rng.hpp"

namespace jamsec::oracle {

Eigen::MatrixXd battery_transition_matrix(double lambda, double mu, int cap) {
  const int n = cap + 1;
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
  for (int level = 0; level <= cap; ++level) {
    const double depart = level > 0 ? mu : 0.0;
    for (int d = 0; d <= 1; ++d) {
      const double pd = d ? depart : 1.0 - depart;
      if (pd == 0.0) continue;
      for (int a = 0; a <= 1; ++a) {
        const double pa = a ? lambda : 1.0 - lambda;
        if (pa == 0.0) continue;
        const int next = std::min(level - d + a, cap);
        p(level, next) += pd * pa;
      }
    }
  }
  return p;
}

Eigen::VectorXd stationary_distribution(const Eigen::MatrixXd& transition) {
  const Eigen::Index n = transition.rows();
  Eigen::MatrixXd a = transition.transpose() - Eigen::MatrixXd::Identity(n, n);
  a.row(n - 1).setOnes();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
  b[n - 1] = 1.0;
  return a.fullPivLu().solve(b);
}

CMatrixXd complement_basis(const CVectorXd& h) {
  const Eigen::Index k = h.size();
  Eigen::HouseholderQR<CMatrixXd> qr{CMatrixXd(h)};
  CMatrixXd q = qr.householderQ() * CMatrixXd::Identity(k, k);
  return q.rightCols(k - 1);
}

CMatrixXd complement_projector(const CVectorXd& h) {
  const CMatrixXd basis = complement_basis(h);
  return basis * basis.adjoint();
}

double sampled_null_space_max_gain(const CVectorXd& h_jb, const CVectorXd& h_je, std::int64_t samples,
                                   std::uint64_t seed) {
  // |v^H h_je|^2 with v = N u, ||u|| = 1, equals |u^H z|^2 / ||u||^2 for z = N^H h_je.
  const CVectorXd z = complement_basis(h_jb).adjoint() * h_je;
  const Eigen::Index m = z.size();
  CounterRng rng(seed);
  double best = 0.0;
  for (std::int64_t s = 0; s < samples; ++s) {
    std::complex<double> dot = 0.0;
    double energy = 0.0;
    for (Eigen::Index i = 0; i < m; ++i) {
      const std::uint64_t bits = rng();
      const double re = static_cast<double>(static_cast<std::int32_t>(bits >> 32)) * 0x1.0p-31;
      const double im = static_cast<double>(static_cast<std::int32_t>(bits & 0xFFFFFFFFu)) * 0x1.0p-31;
      const std::complex<double> u(re, im);
      dot += std::conj(u) * z[i];
      energy += std::norm(u);
    }
    if (energy > 0.0) best = std::max(best, std::norm(dot) / energy);
  }
  return best;
}

}  // namespace jamsec::oracle
