#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lcsgc {

enum class ErrorCode {
  MissingField,
  BadConstraint,
  BadTupleLength,
  BadInput,
  OutOfRange,
  NotIncreasing,
  NotSynchronized,
  CapExceeded,
  UnsupportedAlgorithm,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingField: return "MissingField";
    case ErrorCode::BadConstraint: return "BadConstraint";
    case ErrorCode::BadTupleLength: return "BadTupleLength";
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotIncreasing: return "NotIncreasing";
    case ErrorCode::NotSynchronized: return "NotSynchronized";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::UnsupportedAlgorithm: return "UnsupportedAlgorithm";
  }
  return "Unknown";
}

// All library failures surface as this exception; code() is what the CLI
// reports in its machine-readable error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lcsgc
