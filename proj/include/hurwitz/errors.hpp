#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroPolynomial : public Error {
 public:
  DivisionByZeroPolynomial() : Error("division by the zero polynomial") {}
};

class ZeroDenominatorError : public Error {
 public:
  ZeroDenominatorError() : Error("rational function denominator is the zero polynomial") {}
};

/// Evaluation hit a root of the denominator. `point()` is the offending argument.
class PoleError : public Error {
 public:
  explicit PoleError(std::string point)
      : Error("pole at x = " + point), point_(std::move(point)) {}
  const std::string& point() const noexcept { return point_; }

 private:
  std::string point_;
};

/// Continued-fraction expansion about infinity needs deg(num) = deg(denom) + 1.
class OrientationError : public Error {
 public:
  using Error::Error;
};

class NotApplicableError : public Error {
 public:
  using Error::Error;
};

class SynthesisError : public Error {
 public:
  using Error::Error;
};

/// The numeric oracle could not produce a trustworthy answer.
class IndeterminateError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hurwitz
