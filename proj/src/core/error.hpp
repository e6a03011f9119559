#pragma once

#include <stdexcept>
#include <string>

namespace tsa {

enum class ErrorCode {
  InvalidArgument,
  Dimension,
  Parse,
  Io,
  Numeric,
  Version,
  Training,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void check(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace tsa
