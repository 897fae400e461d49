#ifndef RADOCERT_ERRORS_HPP
#define RADOCERT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace radocert {

// Base class for every error the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// exact_div with a zero divisor or a non-divisor.
class DivisibilityError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its precondition (reducible prime,
// arity mismatch, bad variable index, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. `position` is the 0-based column in `input`.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::string input, std::size_t position)
      : Error("at column " + std::to_string(position + 1) + ": " + message),
        message_(std::move(message)),
        input_(std::move(input)),
        position_(position) {}

  const std::string& message() const { return message_; }
  const std::string& input() const { return input_; }
  std::size_t position() const { return position_; }

  // Two-line rendering: the input followed by a caret under the offending column.
  std::string annotated() const
  {
    return input_ + "\n" + std::string(position_, ' ') + "^ " + message_;
  }

 private:
  std::string message_;
  std::string input_;
  std::size_t position_;
};

}  // namespace radocert

#endif
