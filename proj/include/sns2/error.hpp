#pragma once

#include <stdexcept>
#include <string>

namespace sns2 {

enum class ErrorCode {
  ArityMismatch,
  IndexOutOfRange,
  InvalidArgument,
  ZeroPolynomial,
  Parse,
  UnsupportedSize,
  ExponentOverflow,
  Inconsistency,
};

const char* to_string(ErrorCode code);

/// Structured error carried by every failing operation in the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sns2
