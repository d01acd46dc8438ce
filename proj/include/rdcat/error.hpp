#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rdcat {

/// Domain/codomain or split arithmetic does not line up.
class SignatureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operands live over different rigs (e.g. mod:5 and mod:7).
class RigMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text input could not be parsed. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A constructed fibration morphism whose fiber is not linear in its second argument.
class LinearityViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace rdcat
