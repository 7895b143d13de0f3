#include <random>

#include <gtest/gtest.h>

#include "modfrac/errors.hpp"
#include "modfrac/residues.hpp"
#include "test_support.hpp"

using namespace modfrac;
using modfrac::testing::F;
using modfrac::testing::R;

TEST(Modulus, RejectsValuesBelowTwo) {
  EXPECT_THROW(Modulus(1), RangeError);
  EXPECT_THROW(Modulus(-5), RangeError);
  EXPECT_NO_THROW(Modulus(2));
}

TEST(Residue, RequiresCanonicalRange) {
  EXPECT_THROW(R(17, 17), RangeError);
  EXPECT_THROW(R(-1, 17), RangeError);
  EXPECT_EQ(Residue::reduce(-5, Modulus(17)).value(), 12);
  EXPECT_EQ(Residue::reduce(41, Modulus(17)).value(), 7);
}

TEST(Fraction, ClassFollowsNumeratorSign) {
  EXPECT_EQ(F(-3, 2).residue_class(), ResidueClass::Negative);
  EXPECT_EQ(F(4, 3).residue_class(), ResidueClass::Positive);
  EXPECT_EQ(F(0, 17).residue_class(), ResidueClass::Positive);
  EXPECT_THROW(F(1, -1), RangeError);
}

TEST(Fraction, ClassRanges) {
  const Modulus m(17);
  EXPECT_TRUE(F(0, 17).fits(m));
  EXPECT_TRUE(F(-17, 0).fits(m));
  EXPECT_TRUE(F(-7, 16).fits(m));
  EXPECT_FALSE(F(3, 0).fits(m));
  EXPECT_FALSE(F(3, 18).fits(m));
  EXPECT_FALSE(F(17, 1).fits(m));
  EXPECT_FALSE(F(-1, 17).fits(m));
  EXPECT_FALSE(F(-18, 1).fits(m));
}

TEST(FractionPair, NeedsOppositeSigns) {
  EXPECT_NO_THROW(FractionPair(F(-17, 0), F(0, 1)));
  EXPECT_THROW(FractionPair(F(3, 1), F(4, 3)), ContractError);
  EXPECT_THROW(FractionPair(F(-3, 2), F(-1, 3)), ContractError);
}

TEST(PosResidue, WorkedExamples) {
  EXPECT_EQ(pos_residue(R(7, 17), 3), 4);
  EXPECT_EQ(pos_residue(R(7, 17), 17), 0);
  EXPECT_EQ(pos_residue(R(0, 17), 1), 0);
}

TEST(PosResidue, DenominatorRange) {
  EXPECT_THROW(pos_residue(R(7, 17), 0), RangeError);
  EXPECT_THROW(pos_residue(R(7, 17), 18), RangeError);
}

TEST(NegResidue, WorkedExamples) {
  EXPECT_EQ(neg_residue(R(7, 17), 0), -17);
  EXPECT_EQ(neg_residue(R(7, 17), 2), -3);
  EXPECT_EQ(neg_residue(R(7, 17), 12), -1);
}

TEST(NegResidue, DenominatorRange) {
  EXPECT_THROW(neg_residue(R(7, 17), -1), RangeError);
  EXPECT_THROW(neg_residue(R(7, 17), 17), RangeError);
}

TEST(Represents, WorkedExamples) {
  EXPECT_TRUE(represents(R(7, 17), F(4, 3)));
  EXPECT_FALSE(represents(R(7, 17), F(5, 3)));
  EXPECT_TRUE(represents(R(12, 17), F(-3, 4)));
  EXPECT_TRUE(represents(R(12, 17), F(2, 3)));
}

TEST(Mediant, WorkedExamples) {
  EXPECT_EQ(mediant(F(-17, 0), F(7, 1)), F(-10, 1));
  EXPECT_EQ(mediant(F(-3, 2), F(7, 1)), F(4, 3));
  EXPECT_EQ(mediant(F(-3, 2), F(4, 3)), F(1, 5));
  EXPECT_EQ(mediant(F(-1, 12), F(1, 5)).residue_class(), ResidueClass::Positive);
}

TEST(Determinant, HandComputed) {
  EXPECT_EQ(determinant(FractionPair(F(-3, 2), F(4, 3))), 17);
  EXPECT_EQ(determinant(FractionPair(F(-17, 0), F(7, 1))), 17);
}

// Every residue of every class represents x, and the two classes differ by M.
TEST(ResidueProperties, ExhaustiveSmallModuli) {
  for (long long m = 2; m <= 60; ++m) {
    for (long long x = 0; x < m; ++x) {
      const Residue r = R(x, m);
      for (long long d = 0; d <= m; ++d) {
        if (d >= 1) {
          const Integer p = pos_residue(r, d);
          ASSERT_TRUE(p >= 0 && p < m);
          ASSERT_TRUE(represents(r, Fraction(p, d)));
        }
        if (d <= m - 1) {
          const Integer n = neg_residue(r, d);
          ASSERT_TRUE(n >= -m && n <= -1);
          ASSERT_TRUE(represents(r, Fraction(n, d)));
        }
        if (d >= 1 && d <= m - 1) {
          ASSERT_EQ(pos_residue(r, d) - neg_residue(r, d), m);
        }
      }
    }
  }
}

TEST(ResidueProperties, MediantPreservesRepresentation) {
  std::mt19937_64 rng(17);
  for (long long m : {2, 17, 97, 101, 256, 1009}) {
    std::uniform_int_distribution<long long> pick_x(0, m - 1);
    std::uniform_int_distribution<long long> pick_d(0, 4 * m);
    std::uniform_int_distribution<long long> pick_k(-3, 3);
    for (int i = 0; i < 500; ++i) {
      const Residue r = R(pick_x(rng), m);
      // Any n = x*d + k*M represents x, whatever the class bounds.
      auto any_rep = [&] {
        const long long d = pick_d(rng);
        return F(r.value().convert_to<long long>() * d + pick_k(rng) * m, d);
      };
      const Fraction a = any_rep();
      const Fraction b = any_rep();
      ASSERT_TRUE(represents(r, mediant(a, b)));
    }
  }
}

TEST(ResidueProperties, TotalAt256Bits) {
  // 2^256 - 189 is prime.
  const Modulus m((Integer(1) << 256) - 189);
  const Residue x = Residue::reduce(parse_integer("0x123456789abcdef0fedcba9876543210"), m);
  const Integer d = (Integer(1) << 200) + 12345;
  const Integer p = pos_residue(x, d);
  const Integer n = neg_residue(x, d);
  EXPECT_EQ(p - n, m.value());
  EXPECT_TRUE(represents(x, Fraction(p, d)));
  EXPECT_TRUE(represents(x, Fraction(n, d)));
  EXPECT_TRUE(represents(x, mediant(Fraction(n, d), Fraction(pos_residue(x, d + 1), d + 1))));
  EXPECT_EQ(pos_residue(x, m.value()), 0);
}
