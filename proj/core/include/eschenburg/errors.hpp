#pragma once

#include <stdexcept>
#include <string>

namespace eschenburg {

// Every failure raised by the library derives from Error so callers (the CLI in
// particular) can map families of errors onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input (exit code 2 at the command line).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class NotAUnit : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class ZeroDenominator : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class DegenerateSpace : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NotFree : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// An exact computation would leave the range it was proven safe for.
class Overflow : public Error {
 public:
  using Error::Error;
};

/// Topological hypotheses of the bundle calculus are not met (exit code 3).
class HypothesesViolated : public Error {
 public:
  using Error::Error;
};

class CriterionUnavailable : public HypothesesViolated {
 public:
  using HypothesesViolated::HypothesesViolated;
};

/// Filesystem failure; the message carries the shard identity (exit code 4).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace eschenburg
