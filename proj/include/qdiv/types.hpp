#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace qdiv {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Numerical thresholds shared by the spectral routines. All are relative
// to a scale stated at the point of use.
struct Tolerances {
  double herm = 1e-12;   // ||A - A*||_F <= herm * ||A||_F
  double spec = 1e-10;   // eigenvalue gap merge threshold, times max(1, ||A||_2)
  double supp = 1e-12;   // support threshold, times max eigenvalue
  double psd = 1e-10;    // accepted negative eigenvalue, times ||A||_2
  double proj = 1e-10;   // projection / orthogonality defects
};

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shapes do not match.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An input violates a stated invariant (not Hermitian, not PSD, trace != 1, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A scalar function was asked for a value outside its declared domain, or a
// required property of it was not declared.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Iterative routine did not reach its stopping criterion.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Rank-one images that cannot come from any unitary or antiunitary.
class NoRepresentationError : public Error {
 public:
  NoRepresentationError(const std::string& what, std::string first, std::string second)
      : Error(what), first_(std::move(first)), second_(std::move(second)) {}

  const std::string& first() const noexcept { return first_; }
  const std::string& second() const noexcept { return second_; }

 private:
  std::string first_;
  std::string second_;
};

}  // namespace qdiv
