#pragma once

#include <stdexcept>
#include <string>

namespace planesyz {

enum class ErrorKind {
  ParseError,
  NotHomogeneous,
  DegreeTooSmall,
  NonReduced,
  ConeCurve,
  FieldTooSmall,
  NotDivisible,
  RankMismatch,
  NotThreeSyzygy,
  OutOfRegime,
  NoAligningShift,
  InternalInconsistency,
  EquivalenceViolated,
  UnknownFamily,
  OutOfRange,
  InvalidField,
};

const char* to_string(ErrorKind kind);

/// Validation errors reject the input curve; the rest flag bugs or misuse.
bool is_validation_error(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace planesyz
