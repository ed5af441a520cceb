#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace setadf {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive operation was asked to work beyond kMaxArguments.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Two values that must share an argument domain do not.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed framework, labelling or formula.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The input has no counterpart in the target formalism.
class NotRepresentable : public Error {
 public:
  using Error::Error;
};

/// A guaranteed property failed to hold. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public Error {
 public:
  ParseError(std::string reason, std::size_t line, std::size_t column)
      : Error(reason + " at " + std::to_string(line) + ":" + std::to_string(column)),
        reason_(std::move(reason)),
        line_(line),
        column_(column) {}

  const std::string& reason() const noexcept { return reason_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string reason_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace setadf
