#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace genergy {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape mismatch (non-square input to a square-only routine, bad entry count).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input that must be symmetric is not, beyond roundoff.
class SymmetryError : public Error {
 public:
  using Error::Error;
};

/// NaN or infinite entry.
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

/// Cyclic Jacobi hit its sweep cap. Carries the off-diagonal Frobenius norm
/// that was left when it gave up.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Hard size limit of an exhaustive routine exceeded, or a parameter outside
/// its documented range.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// A quantity that is nonnegative in exact arithmetic came out clearly negative.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

enum class ParseErrorKind {
  malformed,
  endpoint_out_of_range,
  self_loop,
  duplicate_edge,
  bad_header,
  wrong_entry_count,
};

/// Text input rejected. `line()` is 1-based; 0 when the error is not tied to
/// a particular line (e.g. premature end of input).
class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail)
      : Error("line " + std::to_string(line) + ": " + detail), kind_(kind), line_(line) {}
  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

}  // namespace genergy
