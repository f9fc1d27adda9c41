#ifndef HNR_ERROR_HPP
#define HNR_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hnr {

enum class ErrorCode {
  ZeroQ,
  RepeatedU,
  BadShape,
  OutOfRange,
  SizeMismatch,
  ContextMismatch,
  IndexOutOfRange,
  BadLabel,
  NotSymmetrizing,
  SizeGuard,
  AssertFailed,
  SyntaxError,
};

const char* to_string(ErrorCode code);

/// Every library failure is reported through this exception; `code()`
/// carries the machine-readable kind.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Parser failure with the byte offset of the offending token.
class SyntaxError : public Error {
public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorCode::SyntaxError,
              what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

}  // namespace hnr

#endif  // HNR_ERROR_HPP
