#pragma once

#include <ostream>
#include <string_view>

#include "modfrac/integer.hpp"

namespace modfrac {

/// The modulus M of Z/MZ. Always at least 2.
class Modulus {
 public:
  explicit Modulus(Integer value);

  const Integer& value() const noexcept { return value_; }

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  Integer value_;
};

/// An element x of Z/MZ, held in canonical form 0 <= x < M.
class Residue {
 public:
  /// Throws RangeError unless 0 <= x < M.
  Residue(Integer x, Modulus modulus);

  /// Reduces any integer into [0, M).
  static Residue reduce(const Integer& x, const Modulus& modulus);

  const Integer& value() const noexcept { return x_; }
  const Modulus& modulus() const noexcept { return modulus_; }
  const Integer& m() const noexcept { return modulus_.value(); }

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  Integer x_;
  Modulus modulus_;
};

enum class ResidueClass { Positive, Negative };

std::string_view to_string(ResidueClass c) noexcept;

/// A candidate representation N/D of a residue. Not reduced to lowest terms.
///
/// The residue class is a function of the numerator's sign: negative
/// numerators belong to the negative class, everything else (zero included)
/// to the positive class.
class Fraction {
 public:
  /// Throws RangeError if d < 0.
  Fraction(Integer n, Integer d);

  const Integer& n() const noexcept { return n_; }
  const Integer& d() const noexcept { return d_; }

  ResidueClass residue_class() const noexcept {
    return n_ < 0 ? ResidueClass::Negative : ResidueClass::Positive;
  }

  /// Class-specific bounds relative to M: positive fractions have
  /// 0 <= n < M and 1 <= d <= M, negative fractions -M <= n <= -1 and
  /// 0 <= d <= M-1.
  bool fits(const Modulus& modulus) const;

  friend bool operator==(const Fraction&, const Fraction&) = default;

 private:
  Integer n_;
  Integer d_;
};

std::ostream& operator<<(std::ostream& os, const Fraction& f);

/// One negative-class and one positive-class fraction.
struct FractionPair {
  /// Throws ContractError unless neg.n < 0 <= pos.n.
  FractionPair(Fraction neg, Fraction pos);

  Fraction neg;
  Fraction pos;

  friend bool operator==(const FractionPair&, const FractionPair&) = default;
};

std::ostream& operator<<(std::ostream& os, const FractionPair& p);

/// (x*d mod M) for 1 <= d <= M. Throws RangeError otherwise.
Integer pos_residue(const Residue& x, const Integer& d);

/// (x*d mod M) - M for 0 <= d <= M-1. Throws RangeError otherwise.
Integer neg_residue(const Residue& x, const Integer& d);

/// The residue of class `c` at denominator d.
Integer residue(const Residue& x, ResidueClass c, const Integer& d);

/// True iff x*f.d == f.n (mod M).
bool represents(const Residue& x, const Fraction& f);

/// (n1+n2)/(d1+d2). If both inputs represent x, so does the result.
Fraction mediant(const Fraction& a, const Fraction& b);

/// pos.n*neg.d - neg.n*pos.d; equals M on every pair the descent produces.
Integer determinant(const FractionPair& p);

}  // namespace modfrac
