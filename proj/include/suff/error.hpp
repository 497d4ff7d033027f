#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace suff {

enum class ErrorCode {
  InvalidInput,
  UnknownElement,
  DuplicateElement,
  NotAntisymmetric,
  NoUniqueMeet,
  ValueOrderMismatch,
  KindMismatch,
  NotAFilter,
  EmptySet,
  BoundExceeded,
  IncompatibleSpace,
  NonIncreasingAlpha,
  TauOutOfRange,
  LengthMismatch,
  IncompleteTable,
  UnknownProfile,
  EmptyResult,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every recoverable failure in the library is reported through this type.
/// The code is stable and is what the CLI prints in its error report.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace suff
