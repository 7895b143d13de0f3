#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "modfrac/descent.hpp"
#include "modfrac/harness.hpp"
#include "modfrac/residues.hpp"

namespace modfrac {

enum class Display {
  Explicit,     ///< always "n/d"
  BareInteger,  ///< "n" when d == 1
};

/// "-3/2", "0/17"; with Display::BareInteger, "-4" for -4/1.
std::string render(const Fraction& f, Display display = Display::Explicit);
std::string render(const FractionPair& p);

/// Inverse of render(). Accepts "n/d" or a bare "n" (d = 1); the sign may be
/// an ASCII hyphen or U+2212. Throws ParseError.
Fraction parse_fraction(std::string_view text);

// Machine-readable form. Every integer is a decimal string so that moduli of
// any size survive the round trip.
nlohmann::json to_json(const Fraction& f);
nlohmann::json to_json(const DescentTrace& trace);
nlohmann::json to_json(const VerificationReport& report);
Fraction fraction_from_json(const nlohmann::json& j);

}  // namespace modfrac
