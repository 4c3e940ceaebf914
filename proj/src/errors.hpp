#pragma once

#include <stdexcept>
#include <string>

namespace slicegate {

enum class ErrorCode {
  InvalidArgument = 1,
  Parse,
  NotFound,
  Inconsistent,
  Domain,
  Budget,
  HalfTwist,
  MissingInvariant,
  InvalidAlexander,
  Io,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace slicegate
