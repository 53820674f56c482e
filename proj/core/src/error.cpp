#include "mmexp/error.hpp"

namespace mmexp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::config: return "config";
    case ErrorCode::parse: return "parse";
    case ErrorCode::domain: return "domain";
    case ErrorCode::empty_window: return "empty-window";
    case ErrorCode::range_violation: return "range-violation";
    case ErrorCode::degenerate_denominator: return "degenerate-denominator";
    case ErrorCode::numeric: return "numeric";
    case ErrorCode::io: return "io";
  }
  return "unknown";
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::config:
    case ErrorCode::parse:
    case ErrorCode::domain:
      return 2;
    case ErrorCode::empty_window:
    case ErrorCode::range_violation:
    case ErrorCode::degenerate_denominator:
    case ErrorCode::numeric:
      return 3;
    case ErrorCode::io:
      return 4;
  }
  return 1;
}

}  // namespace mmexp
