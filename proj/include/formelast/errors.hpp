#pragma once

#include <stdexcept>

namespace formelast {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Jet arithmetic hit a guard (reciprocal/sqrt at or near zero).
struct SingularJet : Error {
  using Error::Error;
};

// Point outside a chart's regular domain, or metric determinant below guard.
struct SingularPoint : Error {
  using Error::Error;
};

struct OutOfDomain : Error {
  using Error::Error;
};

// Operands evaluated on different charts or at different points.
struct TagMismatch : Error {
  using Error::Error;
};

// An operation asked for more derivative orders than the operand carries.
struct DerivativeBudgetExceeded : Error {
  using Error::Error;
};

struct DegreeOverflow : Error {
  using Error::Error;
};

// A (one-form, vector field) pair that should satisfy v = u♯ does not.
struct InconsistentPair : Error {
  using Error::Error;
};

struct NotNormalized : Error {
  using Error::Error;
};

struct ChartNotAdapted : Error {
  using Error::Error;
};

struct InvalidSpec : Error {
  using Error::Error;
};

struct UnknownSuite : Error {
  using Error::Error;
};

struct UnknownOp : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace formelast
