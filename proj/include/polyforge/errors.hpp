#pragma once

#include <stdexcept>
#include <string>

namespace polyforge {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed presentation text. Carries the 1-based position of the offending
// token.
class ParseError : public Error {
 public:
  ParseError(int line, int col, const std::string& msg)
      : Error("parse error at " + std::to_string(line) + ":" +
              std::to_string(col) + ": " + msg),
        line_(line),
        col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

// A configured resource bound was exceeded (coset table rows, element
// enumeration cap). For coset enumeration this signals either an infinite
// index or an insufficient bound; the caller decides which.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// Bad argument: wrong domain, arity mismatch, element outside the group,
// value out of range.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// A group failed string-C-group validation (non-involution generator,
// string-condition violation, intersection-condition violation).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A structural identity that must hold for the inputs in question failed;
// this indicates a bug or a hypothesis violation and is never silently
// ignored.
class ContractViolationError : public Error {
 public:
  using Error::Error;
};

}  // namespace polyforge
