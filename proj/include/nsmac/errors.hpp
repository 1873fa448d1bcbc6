#pragma once

#include <stdexcept>
#include <string>

#include "nsmac/rational.hpp"

namespace nsmac {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

// Raised when a rational function is evaluated at one of its poles.
struct PoleError : std::domain_error {
  PoleError(const BigRational& q, const BigRational& t)
      : std::domain_error("denominator vanishes at q=" + q.get_str() + ", t=" + t.get_str()),
        qval(q),
        tval(t) {}
  BigRational qval;
  BigRational tval;
};

// Something that cannot happen if the algebra is implemented correctly.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace nsmac
