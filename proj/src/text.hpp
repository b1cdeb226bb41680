#pragma once

// Line/token scanning shared by the text parsers.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "morsetree/error.hpp"
#include "morsetree/rational.hpp"

namespace morsetree::detail {

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

// Tokens of one line, comments stripped. Lines without tokens are dropped.
std::vector<std::vector<Token>> tokenize_lines(std::string_view text);

Rational rational_token(const Token& t);
unsigned long long unsigned_token(const Token& t);

}  // namespace morsetree::detail
