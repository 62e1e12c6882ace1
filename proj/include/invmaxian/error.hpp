#pragma once

#include <stdexcept>
#include <string>

namespace invmaxian {

enum class ErrorCode {
  InvalidVertex,
  NotALeaf,
  InvalidInstance,
  EmptySet,
  DimensionMismatch,
  SizeLimitExceeded,
  Parse,
  Internal,
};

[[nodiscard]] const char* to_string(ErrorCode code) noexcept;

/// Thrown for malformed inputs and violated preconditions. Infeasibility is
/// not an error: solvers report it through `Status::Infeasible`.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace invmaxian
