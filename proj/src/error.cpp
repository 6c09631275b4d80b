#include "ckinv/error.hpp"

namespace ckinv {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ParentMismatch: return "ParentMismatch";
    case ErrorCode::NotZeroOne: return "NotZeroOne";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::IsPermutation: return "IsPermutation";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::MarkerCountMismatch: return "MarkerCountMismatch";
    case ErrorCode::TorsionTooLarge: return "TorsionTooLarge";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

static std::string compose(ErrorCode code, const std::string& detail) {
  std::string msg(to_string(code));
  if (!detail.empty()) {
    msg += ": ";
    msg += detail;
  }
  return msg;
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(compose(code, detail)), code_(code) {}

}  // namespace ckinv
