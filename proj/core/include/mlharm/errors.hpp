#ifndef MLHARM_ERRORS_HPP
#define MLHARM_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace mlharm {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid parameter tuple or argument (fails a type invariant).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Gamma evaluated at (or within tolerance of) a non-positive integer.
class PoleError : public Error {
 public:
  using Error::Error;
};

// Series did not meet its stopping test before the term budget ran out.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

// Operator weight is non-real, non-positive or non-finite.
class NonPositiveWeight : public Error {
 public:
  using Error::Error;
};

// Evaluation point outside the open unit disc.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Coefficient would break |b_1| < 1.
class CoefficientOutOfRange : public Error {
 public:
  using Error::Error;
};

// Inputs to a family procedure fail that procedure's own preconditions.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Phi^n f vanishes (numerically) at one or more sample points.
class DegenerateDenominator : public Error {
 public:
  DegenerateDenominator(const std::string& what, std::vector<std::complex<double>> points)
      : Error(what), points_(std::move(points)) {}

  const std::vector<std::complex<double>>& points() const noexcept { return points_; }

 private:
  std::vector<std::complex<double>> points_;
};

}  // namespace mlharm

#endif  // MLHARM_ERRORS_HPP
