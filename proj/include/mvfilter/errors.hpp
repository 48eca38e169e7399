#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mvfilter {

/// A caller passed a value that violates an operation's precondition.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive operation was asked to run above the configured carrier cap.
class ResourceLimit : public std::runtime_error {
public:
  ResourceLimit(const std::string& what, std::size_t cap)
      : std::runtime_error(what), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

private:
  std::size_t cap_;
};

/// A computed structure contradicts a statement the library relies on.
/// Raised loudly instead of returning a silently wrong answer.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Syntax or semantic error in a text input, with a 1-based position.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what), line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace mvfilter
