#include "modfrac/oracle.hpp"

#include <cstdlib>
#include <string>

#include "modfrac/errors.hpp"

namespace modfrac::oracle {

namespace {

void require_within(const Residue& x, const Integer& ceiling,
                    const char* what) {
  if (x.m() > ceiling) {
    throw CeilingExceeded(std::string(what) + " refused: modulus " +
                          to_string(x.m()) + " exceeds ceiling " +
                          to_string(ceiling));
  }
}

Integer product_mod(const Residue& x, const Integer& d) {
  return (x.value() * d) % x.m();
}

Integer magnitude(const Integer& v) { return v < 0 ? Integer(-v) : v; }

// (max(|n|, d), d, positive-before-negative)
bool better(const Fraction& a, const Fraction& b) {
  const Integer ma = magnitude(a.n()) > a.d() ? magnitude(a.n()) : a.d();
  const Integer mb = magnitude(b.n()) > b.d() ? magnitude(b.n()) : b.d();
  if (ma != mb) return ma < mb;
  if (a.d() != b.d()) return a.d() < b.d();
  return a.n() >= 0 && b.n() < 0;
}

}  // namespace

Ceilings Ceilings::from_environment() {
  Ceilings c;
  if (const char* env = std::getenv("MODFRAC_CEILING"); env && *env) {
    Integer value = parse_integer(env);
    c.enumeration = value;
    c.pair_check = value;
  }
  return c;
}

std::vector<Fraction> enumerate_class(const Residue& x, ResidueClass c,
                                      const Ceilings& ceilings) {
  require_within(x, ceilings.enumeration, "enumeration");
  std::vector<Fraction> out;
  out.reserve(static_cast<std::size_t>(x.m()));
  if (c == ResidueClass::Positive) {
    for (Integer d = 1; d <= x.m(); ++d) {
      out.emplace_back(product_mod(x, d), d);
    }
  } else {
    for (Integer d = 0; d < x.m(); ++d) {
      out.emplace_back(product_mod(x, d) - x.m(), d);
    }
  }
  return out;
}

RepresentationTable enumerate(const Residue& x, const Ceilings& ceilings) {
  return {x, enumerate_class(x, ResidueClass::Positive, ceilings),
          enumerate_class(x, ResidueClass::Negative, ceilings)};
}

Fraction brute_minimum(const Residue& x, const Ceilings& ceilings) {
  const RepresentationTable table = enumerate(x, ceilings);
  Fraction best = table.pos.front();
  for (const Fraction& f : table.pos) {
    if (better(f, best)) best = f;
  }
  for (const Fraction& f : table.neg) {
    if (f.d() >= 1 && better(f, best)) best = f;
  }
  return best;
}

bool brute_pair_minimal(const FractionPair& p, const Residue& x,
                        const Ceilings& ceilings) {
  require_within(x, ceilings.pair_check, "pair check");
  const Integer sum = magnitude(p.neg.n()) + magnitude(p.pos.n());
  for (Integer d = 0; d <= x.m(); ++d) {
    const Integer r = product_mod(x, d);
    if (d >= 1 && magnitude(r) < sum && d < p.pos.d()) return false;
    if (d < x.m() && magnitude(r - x.m()) < sum && d < p.neg.d()) return false;
  }
  return true;
}

}  // namespace modfrac::oracle
