#include "modfrac/residues.hpp"

#include <utility>

#include "modfrac/errors.hpp"

namespace modfrac {

Modulus::Modulus(Integer value) : value_(std::move(value)) {
  if (value_ < 2) {
    throw RangeError("modulus must be at least 2, got " + to_string(value_));
  }
}

Residue::Residue(Integer x, Modulus modulus)
    : x_(std::move(x)), modulus_(std::move(modulus)) {
  if (x_ < 0 || x_ >= modulus_.value()) {
    throw RangeError("residue " + to_string(x_) + " not in [0, " +
                     to_string(modulus_.value()) + ")");
  }
}

Residue Residue::reduce(const Integer& x, const Modulus& modulus) {
  return Residue(floor_mod(x, modulus.value()), modulus);
}

std::string_view to_string(ResidueClass c) noexcept {
  return c == ResidueClass::Positive ? "positive" : "negative";
}

Fraction::Fraction(Integer n, Integer d) : n_(std::move(n)), d_(std::move(d)) {
  if (d_ < 0) {
    throw RangeError("denominator must be non-negative, got " + to_string(d_));
  }
}

bool Fraction::fits(const Modulus& modulus) const {
  const Integer& m = modulus.value();
  if (residue_class() == ResidueClass::Positive) {
    return n_ < m && d_ >= 1 && d_ <= m;
  }
  return n_ >= -m && d_ <= m - 1;
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) {
  return os << f.n() << '/' << f.d();
}

FractionPair::FractionPair(Fraction neg_, Fraction pos_)
    : neg(std::move(neg_)), pos(std::move(pos_)) {
  if (!(neg.n() < 0 && pos.n() >= 0)) {
    throw ContractError("pair needs a negative and a non-negative numerator");
  }
}

std::ostream& operator<<(std::ostream& os, const FractionPair& p) {
  return os << '(' << p.neg << ", " << p.pos << ')';
}

Integer pos_residue(const Residue& x, const Integer& d) {
  if (d < 1 || d > x.m()) {
    throw RangeError("positive residue needs 1 <= d <= M, got d = " +
                     to_string(d));
  }
  return (x.value() * d) % x.m();
}

Integer neg_residue(const Residue& x, const Integer& d) {
  if (d < 0 || d >= x.m()) {
    throw RangeError("negative residue needs 0 <= d < M, got d = " +
                     to_string(d));
  }
  return (x.value() * d) % x.m() - x.m();
}

Integer residue(const Residue& x, ResidueClass c, const Integer& d) {
  return c == ResidueClass::Positive ? pos_residue(x, d) : neg_residue(x, d);
}

bool represents(const Residue& x, const Fraction& f) {
  return floor_mod(x.value() * f.d() - f.n(), x.m()) == 0;
}

Fraction mediant(const Fraction& a, const Fraction& b) {
  return Fraction(a.n() + b.n(), a.d() + b.d());
}

Integer determinant(const FractionPair& p) {
  return p.pos.n() * p.neg.d() - p.neg.n() * p.pos.d();
}

}  // namespace modfrac
