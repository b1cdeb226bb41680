#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace morsetree {

// Malformed text input. Line and column are 1-based; 0 means unknown.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& message, std::size_t line = 0, std::size_t column = 0);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

// An operation was asked to work outside the regime it supports, e.g. a
// decision procedure that needs an all-critical function got matched cells.
class UnsupportedRegime : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace morsetree
