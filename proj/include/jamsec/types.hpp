#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace jamsec {

template <typename Scalar>
using Complex = std::complex<Scalar>;

template <typename Scalar>
using CVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

template <typename Scalar>
using CMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

using CVectorXd = CVector<double>;
using CMatrixXd = CMatrix<double>;

/// Jammer-to-Bob channel is the zero vector, so no null space can be built.
class DegenerateChannelError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Eve's jammer channel lies in span{h_jb}: every Bob-nulling weight is
/// also orthogonal to Eve and the jamming gain is zero.
class DegenerateAlignmentError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jamsec
