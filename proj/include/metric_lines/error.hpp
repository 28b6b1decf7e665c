#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace metric_lines {

enum class ErrorKind {
  Asymmetry,
  NonzeroDiagonal,
  NonpositiveDistance,
  TriangleViolation,
  IndexOutOfRange,
  DegeneratePair,
  TooFewPoints,
  XInsideT,
  TooManyAssignments,
  SolverFailure,
  DisconnectedGraph,
  NotOneTwoSpace,
  ArityMismatch,
  BadParams,
  PreconditionUnmet,
  SizeCap,
  EmptyUniverse,
  Parse,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this type; `kind()` identifies
// which contract was broken.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// d(from, to) > d(from, via) + d(via, to)
class TriangleViolation : public Error {
 public:
  TriangleViolation(std::size_t from, std::size_t to, std::size_t via);

  std::size_t from() const noexcept { return from_; }
  std::size_t to() const noexcept { return to_; }
  std::size_t via() const noexcept { return via_; }

 private:
  std::size_t from_, to_, via_;
};

// Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_, column_;
};

}  // namespace metric_lines
