#pragma once

#include <stdexcept>
#include <string>

namespace lderiv {

// Two families of failure. Validation errors mean the caller asked for
// something outside an operation's domain; computation errors mean the
// numerics could not deliver the requested accuracy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class ComputationError : public Error {
 public:
  using Error::Error;
};

// s = 1 for Hurwitz zeta and the L-series built on it.
class PoleError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class ConvergenceError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

// Working precision too small for the requested operation (e.g. the
// relation lattice scaling underflows).
class PrecisionError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

}  // namespace lderiv
