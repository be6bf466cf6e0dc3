#include "holo/error.hpp"

namespace holo {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid input";
    case ErrorKind::InvalidParameter: return "invalid parameter";
    case ErrorKind::OutOfHalfspace: return "direction outside half-space";
    case ErrorKind::SingularEvaluation: return "singular evaluation";
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::ExceptionalDirection: return "exceptional direction";
    case ErrorKind::InfeasibleParameters: return "infeasible parameters";
    case ErrorKind::DegenerateDeterminant: return "degenerate determinant";
    case ErrorKind::OutOfPatch: return "outside grid patch";
    case ErrorKind::UndefinedDenominator: return "undefined denominator";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Io: return "I/O error";
  }
  return "unknown error";
}

}  // namespace holo
