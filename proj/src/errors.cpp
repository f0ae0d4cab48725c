#include "paracontact/errors.hpp"

namespace paracontact {

const char* error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::JacobiViolation: return "JacobiViolation";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::PostconditionFailed: return "PostconditionFailed";
    case ErrorKind::DegeneratePlane: return "DegeneratePlane";
    case ErrorKind::ClassBoundary: return "ClassBoundary";
    case ErrorKind::NotInvolutive: return "NotInvolutive";
    case ErrorKind::DegeneratePang: return "DegeneratePang";
    case ErrorKind::NotDefinite: return "NotDefinite";
    case ErrorKind::InvalidAlpha: return "InvalidAlpha";
    case ErrorKind::SasakianInput: return "SasakianInput";
    case ErrorKind::NotNullity: return "NotNullity";
    case ErrorKind::ConstraintViolation: return "ConstraintViolation";
    case ErrorKind::NormalizationFailure: return "NormalizationFailure";
    case ErrorKind::InexactRoot: return "InexactRoot";
    case ErrorKind::WrongKind: return "WrongKind";
  }
  return "Unknown";
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::JacobiViolation:
    case ErrorKind::DimensionMismatch:
      return 2;
    case ErrorKind::SingularMatrix:
    case ErrorKind::RankDeficient:
    case ErrorKind::NormalizationFailure:
      return 3;
    default:
      return 1;
  }
}

}  // namespace paracontact
