#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace knotsig {

// Bad user input: malformed descriptors or parameters outside the
// validity domain of the computation.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Descriptor syntax error; position is the byte offset of the offending
// character in the input text.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : ValidationError(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A proven mathematical fact failed to hold at runtime. This is always an
// implementation bug, never a property of the input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace knotsig
