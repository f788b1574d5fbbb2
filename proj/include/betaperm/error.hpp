#pragma once

#include <stdexcept>
#include <string>

namespace betaperm {

/// Raised when an argument lies outside the domain of an operation.
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the text parsers; carries the byte offset of the failure.
class ParseError : public InvalidInput {
public:
  ParseError(const std::string& what, std::size_t position)
      : InvalidInput(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace betaperm
