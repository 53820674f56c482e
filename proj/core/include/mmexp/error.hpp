#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mmexp {

enum class ErrorCode {
  config,
  parse,
  domain,
  empty_window,
  range_violation,
  degenerate_denominator,
  numeric,
  io,
};

std::string_view to_string(ErrorCode code);

/// Process exit status for a failure class: 2 config, 3 numeric, 4 I/O.
int exit_code(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(ErrorCode::config, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorCode::domain, what) {}
};

/// The index window ceil(n ln a)..floor(n ln b) is empty; n must be raised.
class EmptyWindow : public Error {
 public:
  explicit EmptyWindow(const std::string& what) : Error(ErrorCode::empty_window, what) {}
};

class RangeViolation : public Error {
 public:
  explicit RangeViolation(const std::string& what) : Error(ErrorCode::range_violation, what) {}
};

class DegenerateDenominator : public Error {
 public:
  explicit DegenerateDenominator(const std::string& what)
      : Error(ErrorCode::degenerate_denominator, what) {}
};

class NumericError : public Error {
 public:
  explicit NumericError(const std::string& what) : Error(ErrorCode::numeric, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCode::io, what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorCode::parse, what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A point-level failure inside a grid evaluation, tagged with the grid index.
class GridPointError : public Error {
 public:
  GridPointError(ErrorCode code, std::size_t index, const std::string& what)
      : Error(code, what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace mmexp
