#include "alab/error.h"

namespace alab {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidCharacter: return "InvalidCharacter";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kEmptyInitial: return "EmptyInitial";
    case ErrorCode::kSplitOutOfRange: return "SplitOutOfRange";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kSpaceMismatch: return "SpaceMismatch";
    case ErrorCode::kOverlappingRanges: return "OverlappingRanges";
    case ErrorCode::kMissingString: return "MissingString";
    case ErrorCode::kEmptyString: return "EmptyString";
    case ErrorCode::kAllDropped: return "AllDropped";
    case ErrorCode::kGridTooSmall: return "GridTooSmall";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kNonPositiveMax: return "NonPositiveMax";
    case ErrorCode::kOutOfBounds: return "OutOfBounds";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kMissingRule: return "MissingRule";
    case ErrorCode::kDuplicateRule: return "DuplicateRule";
    case ErrorCode::kBadClass: return "BadClass";
    case ErrorCode::kUnknownMeasure: return "UnknownMeasure";
    case ErrorCode::kSchemaMismatch: return "SchemaMismatch";
    case ErrorCode::kChecksumMismatch: return "ChecksumMismatch";
    case ErrorCode::kBadRecord: return "BadRecord";
    case ErrorCode::kSinkFailure: return "SinkFailure";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, long long detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + message),
      code_(code),
      detail_(detail) {}

}  // namespace alab
