#include "suff/error.hpp"

namespace suff {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorCode::NoUniqueMeet: return "NoUniqueMeet";
    case ErrorCode::ValueOrderMismatch: return "ValueOrderMismatch";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::NotAFilter: return "NotAFilter";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::IncompatibleSpace: return "IncompatibleSpace";
    case ErrorCode::NonIncreasingAlpha: return "NonIncreasingAlpha";
    case ErrorCode::TauOutOfRange: return "TauOutOfRange";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::IncompleteTable: return "IncompleteTable";
    case ErrorCode::UnknownProfile: return "UnknownProfile";
    case ErrorCode::EmptyResult: return "EmptyResult";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace suff
