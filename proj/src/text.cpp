#include "text.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace morsetree::detail {

std::vector<std::vector<Token>> tokenize_lines(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::size_t line = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view row = text.substr(pos, end - pos);
    if (auto hash = row.find('#'); hash != std::string_view::npos) row = row.substr(0, hash);
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < row.size()) {
      while (i < row.size() && std::isspace(static_cast<unsigned char>(row[i]))) ++i;
      std::size_t start = i;
      while (i < row.size() && !std::isspace(static_cast<unsigned char>(row[i]))) ++i;
      if (i > start) tokens.push_back({row.substr(start, i - start), line, start + 1});
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    if (end == text.size()) break;
    pos = end + 1;
    ++line;
  }
  return lines;
}

Rational rational_token(const Token& t) {
  try {
    return parse_rational(t.text);
  } catch (const std::invalid_argument&) {
    throw InputError("expected a number, got '" + std::string(t.text) + "'", t.line, t.column);
  }
}

unsigned long long unsigned_token(const Token& t) {
  unsigned long long v = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size())
    throw InputError("expected a vertex id, got '" + std::string(t.text) + "'", t.line, t.column);
  return v;
}

}  // namespace morsetree::detail
