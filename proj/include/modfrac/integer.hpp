#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace modfrac {

using Integer = boost::multiprecision::cpp_int;

/// Parses an optionally signed decimal or `0x`-prefixed hexadecimal integer.
/// Leading zeros are decimal, never octal. Throws ParseError.
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& value);

/// Mathematical modulo: result lies in [0, m) for m > 0.
Integer floor_mod(const Integer& a, const Integer& m);

Integer abs(const Integer& value);

Integer gcd(const Integer& a, const Integer& b);

/// Number of bits in |value|; 0 for zero.
std::size_t bit_length(const Integer& value);

}  // namespace modfrac
