#pragma once
// Error taxonomy for the distillation library. Everything derives from
// gkd::Error so callers can catch the whole family at the CLI boundary.

#include <stdexcept>
#include <string>

namespace gkd {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands with incompatible dimensions; message names both shapes.
struct ShapeError : Error {
  using Error::Error;
};

// Hyperparameter outside its valid range (tau <= 0, bad momentum, ...).
struct InvalidHyperparameter : Error {
  using Error::Error;
};

// A primitive produced NaN/Inf; message names the primitive.
struct NumericOverflow : Error {
  using Error::Error;
};

// backward() called twice on the same tape without a fresh forward pass.
struct StaleTape : Error {
  using Error::Error;
};

// Bad generation / split / batch request, or a malformed config file.
struct InvalidConfig : Error {
  using Error::Error;
};

// Mathematical domain violation (probability outside (0,1), non-simplex input).
struct DomainError : Error {
  using Error::Error;
};

// A class required by an operation has no instances; message names the class.
struct MissingClass : Error {
  using Error::Error;
};

// Mismatched class sets or otherwise irreconcilable structures.
struct StructuralError : Error {
  using Error::Error;
};

// The finite-difference oracle detected a non-deterministic loss function.
struct OracleUnusable : Error {
  using Error::Error;
};

struct TrainingDiverged : Error {
  TrainingDiverged(const std::string& msg, int epoch_index)
      : Error(msg), epoch(epoch_index) {}
  int epoch;
};

// A whole training stage made no progress (e.g. every batch mined zero tuples).
struct StageDegenerate : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace gkd
