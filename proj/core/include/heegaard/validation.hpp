#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace heegaard {

enum class ValidationCode {
  Ok,
  BadIndex,
  SlotMatchedTwice,
  SlotUnmatched,
  CountMismatch,
  Disconnected,
  ParityViolation,
  TwistOnUnmetCurve,
  NegativeMultiplicity,
};

const char* to_string(ValidationCode code);

struct ValidationResult {
  ValidationCode code = ValidationCode::Ok;
  std::string message;

  bool ok() const { return code == ValidationCode::Ok; }
  explicit operator bool() const { return ok(); }

  static ValidationResult success() { return {}; }
  static ValidationResult failure(ValidationCode c, std::string msg) {
    return {c, std::move(msg)};
  }
};

// Malformed user input (file schema or semantic invariants).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Work bound exceeded before any computation started.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal self-check failed; the artifact, not the input, is wrong.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace heegaard
