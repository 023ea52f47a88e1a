#pragma once

#include <stdexcept>
#include <string>

namespace cmaut {

enum class ErrorCode {
  InvalidArgument,
  NotUnitary,
  ZeroPolynomial,
  EmptySet,
  DuplicateElement,
  ResultantZero,
  DegreeBound,
  PreconditionViolated,
  KeyMismatch,
  ResourceLimit,
  InternalError,
};

const char* error_name(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above; the
// message is prefixed with the code's name.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cmaut
