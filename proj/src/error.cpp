#include "hnr/error.hpp"

namespace hnr {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroQ: return "ZeroQ";
    case ErrorCode::RepeatedU: return "RepeatedU";
    case ErrorCode::BadShape: return "BadShape";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::BadLabel: return "BadLabel";
    case ErrorCode::NotSymmetrizing: return "NotSymmetrizing";
    case ErrorCode::SizeGuard: return "SizeGuard";
    case ErrorCode::AssertFailed: return "AssertFailed";
    case ErrorCode::SyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

}  // namespace hnr
