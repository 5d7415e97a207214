#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace apolar {

// Base for every error raised by the library. Callers that only need to
// report failures catch this one.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  enum class Kind { syntax, unknown_variable, zero_polynomial };

  ParseError(Kind kind, std::size_t position, const std::string& what)
      : Error(what), kind_(kind), position_(position) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

// A closed-form value was requested outside the hypothesis it is proved under.
class AssumptionNotSatisfied : public Error {
 public:
  using Error::Error;
};

// Every valid witness linear form requires irrational coefficients.
class AlgebraicExtensionRequired : public Error {
 public:
  using Error::Error;
};

class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

// The quotient still has a nonzero Hilbert value at the truncation degree.
class NonArtinian : public Error {
 public:
  using Error::Error;
};

}  // namespace apolar
