#include "caterpillar/errors.hpp"

namespace caterpillar {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SizeTooSmall: return "SizeTooSmall";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::GuardExceeded: return "GuardExceeded";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::KTooLargeForTruncation: return "KTooLargeForTruncation";
    case ErrorCode::NotAv132: return "NotAv132";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NameCountMismatch: return "NameCountMismatch";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "UnknownError";
}

}  // namespace caterpillar
