#include "morsetree/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace morsetree {
namespace {

using boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

cpp_int to_int(std::string_view digits) { return cpp_int(std::string(digits)); }

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    cpp_int d = to_int(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    result = Rational(to_int(num), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    cpp_int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    cpp_int num = (whole.empty() ? cpp_int(0) : to_int(whole)) * scale +
                  (frac.empty() ? cpp_int(0) : to_int(frac));
    result = Rational(num, scale);
  } else {
    if (!all_digits(s)) throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    result = Rational(to_int(s));
  }
  return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& value) {
  auto num = boost::multiprecision::numerator(value);
  auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace morsetree
