#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace bqha {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

// Raised for inputs outside the mathematical domain (|z| >= 1, alpha <= -1, p < 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when a Mobius denominator or cocycle base vanishes.
class SingularMapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace bqha
