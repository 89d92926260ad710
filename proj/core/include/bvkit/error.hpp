#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bvkit {

// Bad input: malformed expressions, inconsistent presentations, wrong degrees.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Syntax error carrying a 1-based column into the parsed text.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t column)
      : InputError(what + " at column " + std::to_string(column)), column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

}  // namespace bvkit
