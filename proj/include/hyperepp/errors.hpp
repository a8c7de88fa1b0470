#pragma once

#include <stdexcept>
#include <string>

namespace hyperepp {

// A density matrix or state vector violated its contract (non-Hermitian,
// wrong trace, zero vector, rails not in the expected configuration, ...).
class InvalidStateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operator argument violated its contract: non-unitary matrix passed to
// apply_unitary, incomplete Kraus set passed to measure, or a pipeline state
// that fails an exact internal consistency check.
class ContractViolationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The Bell-state analyzer only defines an answer for Bell inputs; anything
// else is reported, not guessed.
class ClassificationUndefinedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Recursive purification cannot improve a fidelity at or below 1/2.
class NonPurifiableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hyperepp
