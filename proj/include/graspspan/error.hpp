#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace graspspan {

enum class ErrorCode {
  ActuationOutOfRange,
  DepthOutOfRange,
  WrongExtentKind,
  MissingGraspType,
  MissingObjectDimension,
  UnboundedAxis,
  InfeasibleOverlay,
  InvalidArgument,
  InvariantViolation,
  SyntaxError,
  SchemaError,
  UnsupportedVersion,
  DocumentTooLarge,
};

std::string_view to_string(ErrorCode code);

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// One broken invariant. `path` is a JSON pointer into the on-disk document
/// layout, so parse errors and validation reports share one addressing scheme.
struct Violation {
  std::string code;
  std::string path;
  std::string message;

  bool operator==(const Violation&) const = default;
};

using Report = std::vector<Violation>;

/// Thrown when constructing a validated type from data that breaks its
/// invariants.
class ValidationError : public Error {
 public:
  explicit ValidationError(Report violations);

  const Report& violations() const noexcept { return violations_; }

 private:
  Report violations_;
};

/// Parse failure. Syntax errors carry line/column, schema errors carry a path.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, const std::string& message, std::string path,
             std::size_t line = 0, std::size_t column = 0,
             Report violations = {});

  const std::string& path() const noexcept { return path_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const Report& violations() const noexcept { return violations_; }

 private:
  std::string path_;
  std::size_t line_;
  std::size_t column_;
  Report violations_;
};

}  // namespace graspspan
