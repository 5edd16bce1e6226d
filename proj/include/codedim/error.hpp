#pragma once

#include <stdexcept>
#include <string>

namespace codedim {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kGuard,
  kConsistency,
  kIo,
};

// Every failure raised by the library carries one of the codes above; the C
// API maps them one-to-one onto codedim_status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace codedim
