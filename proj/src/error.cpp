#include "cmaut/error.hpp"

namespace cmaut {

const char* error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::ResultantZero: return "ResultantZero";
    case ErrorCode::DegreeBound: return "DegreeBound";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::KeyMismatch: return "KeyMismatch";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

}  // namespace cmaut
