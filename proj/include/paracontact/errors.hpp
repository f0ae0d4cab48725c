#ifndef PARACONTACT_ERRORS_HPP
#define PARACONTACT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace paracontact {

enum class ErrorKind {
  SingularMatrix,
  RankDeficient,
  ParseError,
  JacobiViolation,
  DimensionMismatch,
  InvalidParams,
  PostconditionFailed,
  DegeneratePlane,
  ClassBoundary,
  NotInvolutive,
  DegeneratePang,
  NotDefinite,
  InvalidAlpha,
  SasakianInput,
  NotNullity,
  ConstraintViolation,
  NormalizationFailure,
  InexactRoot,
  WrongKind,
};

const char* error_name(ErrorKind kind);

// Exit code the CLI uses for an error of this kind.
int exit_code_for(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace paracontact

#endif
