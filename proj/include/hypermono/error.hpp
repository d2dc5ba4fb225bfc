#pragma once

#include <stdexcept>
#include <string>

namespace hypermono {

enum class ErrorCode {
  kInvalidArgument = 1,
  kNotHypermap = 2,
  kNotCircular = 3,
  kInfeasible = 4,
  kInternal = 5,
  kIo = 6,
};

// Every failure raised by the library carries one of the codes above; the C
// API maps them one-to-one onto its status values.
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

}  // namespace hypermono
