#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ckinv {

enum class ErrorCode {
  NotSquare,
  DimensionMismatch,
  ParentMismatch,
  NotZeroOne,
  NotIrreducible,
  IsPermutation,
  TooSmall,
  IndexOutOfRange,
  MarkerCountMismatch,
  TorsionTooLarge,
  NotFinite,
  TooLarge,
  ParseError,
  InternalError,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-readable error code. The message always
/// starts with the code name so CLI diagnostics name the violated condition.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ckinv
