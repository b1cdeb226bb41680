#include "morsetree/error.hpp"

namespace morsetree {
namespace {

std::string located(const std::string& message, std::size_t line, std::size_t column) {
  if (line == 0) return message;
  return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

}  // namespace

InputError::InputError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(located(message, line, column)),
      message_(message),
      line_(line),
      column_(column) {}

}  // namespace morsetree
