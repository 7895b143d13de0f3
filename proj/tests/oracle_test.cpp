#include <cstdlib>

#include <gtest/gtest.h>

#include "modfrac/errors.hpp"
#include "modfrac/oracle.hpp"
#include "test_support.hpp"

using namespace modfrac;
using modfrac::testing::F;
using modfrac::testing::fractions;
using modfrac::testing::R;

namespace {
FractionPair P(long long nn, long long nd, long long pn, long long pd) {
  return FractionPair(F(nn, nd), F(pn, pd));
}
}  // namespace

TEST(EnumerateClass, SevenModSeventeenPositive) {
  EXPECT_EQ(oracle::enumerate_class(R(7, 17), ResidueClass::Positive),
            fractions({{7, 1}, {14, 2}, {4, 3}, {11, 4}, {1, 5}, {8, 6},
                       {15, 7}, {5, 8}, {12, 9}, {2, 10}, {9, 11}, {16, 12},
                       {6, 13}, {13, 14}, {3, 15}, {10, 16}, {0, 17}}));
}

TEST(EnumerateClass, SevenModSeventeenNegative) {
  EXPECT_EQ(oracle::enumerate_class(R(7, 17), ResidueClass::Negative),
            fractions({{-17, 0}, {-10, 1}, {-3, 2}, {-13, 3}, {-6, 4},
                       {-16, 5}, {-9, 6}, {-2, 7}, {-12, 8}, {-5, 9},
                       {-15, 10}, {-8, 11}, {-1, 12}, {-11, 13}, {-4, 14},
                       {-14, 15}, {-7, 16}}));
}

TEST(EnumerateClass, ZeroModTwo) {
  EXPECT_EQ(oracle::enumerate_class(R(0, 2), ResidueClass::Positive),
            fractions({{0, 1}, {0, 2}}));
}

TEST(Enumerate, CompleteAndPaired) {
  for (long long m = 2; m <= 80; ++m) {
    for (long long xv = 0; xv < m; ++xv) {
      const Residue x = R(xv, m);
      const auto t = oracle::enumerate(x);
      ASSERT_EQ(t.pos.size(), static_cast<std::size_t>(m));
      ASSERT_EQ(t.neg.size(), static_cast<std::size_t>(m));
      for (std::size_t i = 0; i < t.pos.size(); ++i) {
        ASSERT_EQ(t.pos[i].d(), Integer(i + 1));
        ASSERT_EQ(t.neg[i].d(), Integer(i));
        ASSERT_TRUE(represents(x, t.pos[i]) && represents(x, t.neg[i]));
        ASSERT_TRUE(t.pos[i].fits(x.modulus()) && t.neg[i].fits(x.modulus()));
      }
      // pos[d] - neg[d] = M for shared d in 1..M-1
      for (long long d = 1; d <= m - 1; ++d) {
        ASSERT_EQ(t.pos[d - 1].n() - t.neg[d].n(), m);
      }
    }
  }
}

TEST(BruteMinimum, WorkedExamples) {
  EXPECT_EQ(oracle::brute_minimum(R(12, 17)), F(2, 3));
  EXPECT_EQ(oracle::brute_minimum(R(7, 17)), F(-3, 2));
  EXPECT_EQ(oracle::brute_minimum(R(10, 17)), F(3, 2));
  EXPECT_EQ(oracle::brute_minimum(R(0, 17)), F(0, 1));
}

TEST(BrutePairMinimal, WorkedExamples) {
  EXPECT_TRUE(oracle::brute_pair_minimal(P(-3, 2, 4, 3), R(7, 17)));
  EXPECT_FALSE(oracle::brute_pair_minimal(P(-6, 4, 7, 1), R(7, 17)));
  EXPECT_TRUE(oracle::brute_pair_minimal(P(-17, 0, 0, 1), R(0, 17)));
}

TEST(Ceilings, RefuseLargeModuli) {
  oracle::Ceilings c;
  c.enumeration = 100;
  c.pair_check = 50;
  EXPECT_THROW(oracle::enumerate_class(R(1, 101), ResidueClass::Positive, c),
               CeilingExceeded);
  EXPECT_NO_THROW(oracle::enumerate_class(R(1, 100), ResidueClass::Positive, c));
  EXPECT_THROW(oracle::brute_minimum(R(1, 101), c), CeilingExceeded);
  EXPECT_THROW(oracle::brute_pair_minimal(P(-51, 0, 1, 1), R(1, 51), c),
               CeilingExceeded);
}

TEST(Ceilings, DefaultsAndEnvironment) {
  const oracle::Ceilings d;
  EXPECT_EQ(d.enumeration, 1'000'000);
  EXPECT_EQ(d.pair_check, 10'000);
  ::setenv("MODFRAC_CEILING", "0x40", 1);
  const auto e = oracle::Ceilings::from_environment();
  ::unsetenv("MODFRAC_CEILING");
  EXPECT_EQ(e.enumeration, 64);
  EXPECT_EQ(e.pair_check, 64);
}
