#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace alab {

enum class ErrorCode {
  kInvalidCharacter,
  kOutOfRange,
  kEmptyInitial,
  kSplitOutOfRange,
  kOverflow,
  kIndexOutOfRange,
  kSpaceMismatch,
  kOverlappingRanges,
  kMissingString,
  kEmptyString,
  kAllDropped,
  kGridTooSmall,
  kEmptyInput,
  kNonPositiveMax,
  kOutOfBounds,
  kLengthMismatch,
  kMissingRule,
  kDuplicateRule,
  kBadClass,
  kUnknownMeasure,
  kSchemaMismatch,
  kChecksumMismatch,
  kBadRecord,
  kSinkFailure,
  kInvalidArgument,
};

std::string_view error_name(ErrorCode code);

// All library failures are reported through this type; `code` identifies
// the failure kind and `detail` carries the offending position/value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, long long detail = -1);

  ErrorCode code() const noexcept { return code_; }
  long long detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  long long detail_;
};

}  // namespace alab
