// PDIG - Primal-Dual Incremental Gradient solver
// Copyright 2026 PDIG Contributors
// Licensed under Apache 2.0

#ifndef PDIG_ERRORS_HPP
#define PDIG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pdig {

// Broken precondition on an in-process API call (dimension mismatch,
// index out of range, invalid argument value).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Invalid user-facing configuration (CLI flags, solve options, missing
// dual bound).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Certificate handed to the dual-bound estimator is not usable
// (boundary point, cone with empty interior).
class SlaterError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Iterative routine ran out of iterations; carries the best estimate
// seen so far.
class NoConvergenceError : public std::runtime_error {
 public:
  NoConvergenceError(const std::string& what, double estimate)
      : std::runtime_error(what), last_estimate(estimate) {}
  double last_estimate;
};

// Malformed input file; message includes position/field context.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pdig

#endif
