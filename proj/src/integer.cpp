#include "modfrac/integer.hpp"

#include <cctype>

#include "modfrac/errors.hpp"

namespace modfrac {

Integer parse_integer(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  bool hex = false;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    hex = true;
    text.remove_prefix(2);
  }
  if (text.empty()) {
    throw ParseError("not an integer: '" + original + "'");
  }
  Integer value = 0;
  const unsigned base = hex ? 16 : 10;
  for (char c : text) {
    const auto u = static_cast<unsigned char>(c);
    unsigned digit = 0;
    if (std::isdigit(u)) {
      digit = static_cast<unsigned>(c - '0');
    } else if (hex && std::isxdigit(u)) {
      digit = static_cast<unsigned>(std::tolower(u) - 'a' + 10);
    } else {
      throw ParseError("not an integer: '" + original + "'");
    }
    value = value * base + digit;
  }
  return negative ? Integer(-value) : value;
}

std::string to_string(const Integer& value) { return value.str(); }

Integer floor_mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Integer abs(const Integer& value) { return value < 0 ? Integer(-value) : value; }

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

std::size_t bit_length(const Integer& value) {
  if (value == 0) return 0;
  return boost::multiprecision::msb(abs(value)) + 1;
}

}  // namespace modfrac
