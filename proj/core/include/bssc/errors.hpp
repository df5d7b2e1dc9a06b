#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bssc {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user-supplied value (probability out of range, malformed table, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// alpha + beta = 1 (output independent of input, zero capacity for every
// cost level) or the gamma = 1/2 division in the Markov input construction.
class SingularChannelError : public Error {
 public:
  using Error::Error;
};

// A kernel does not have the two-parameter state-symmetric structure.
class StructureError : public Error {
 public:
  using Error::Error;
};

// The Markov input matrix has an entry outside [0,1] for the requested
// (alpha, beta, kappa); reported, never clamped.
class InfeasiblePolicyError : public Error {
 public:
  using Error::Error;
};

// Induced output chain has no unique stationary law (corner policies).
class DegeneratePolicyError : public Error {
 public:
  using Error::Error;
};

// Constrained grid search found no point inside the cost band.
class ConstraintInfeasibleError : public Error {
 public:
  using Error::Error;
};

// Policy enumeration would exceed the configured evaluation budget.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, std::uint64_t required, std::uint64_t budget)
      : Error(what), required_evaluations(required), budget(budget) {}
  std::uint64_t required_evaluations;
  std::uint64_t budget;
};

}  // namespace bssc
