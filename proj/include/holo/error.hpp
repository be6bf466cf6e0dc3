#pragma once

#include <stdexcept>
#include <string>

namespace holo {

enum class ErrorKind {
  InvalidInput,
  InvalidParameter,
  OutOfHalfspace,
  SingularEvaluation,
  Domain,
  ExceptionalDirection,
  InfeasibleParameters,
  DegenerateDeterminant,
  OutOfPatch,
  UndefinedDenominator,
  Parse,
  Io,
};

const char* to_string(ErrorKind kind) noexcept;

/// Exception carrying a machine-checkable category alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace holo
