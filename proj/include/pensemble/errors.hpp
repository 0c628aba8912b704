#pragma once

#include <stdexcept>
#include <string>

namespace pensemble {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on a parameter or argument was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A projective point lies on the hyperplane at infinity of the affine chart.
class PointAtInfinity : public Error {
 public:
  using Error::Error;
};

/// The sampler exhausted its per-point proposal budget.
class RejectionBudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature failed to reach the requested tolerance.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double achieved)
      : Error(what), achieved_(achieved) {}
  double achieved_tolerance() const noexcept { return achieved_; }

 private:
  double achieved_;
};

}  // namespace pensemble
