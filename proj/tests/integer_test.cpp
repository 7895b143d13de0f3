#include <gtest/gtest.h>

#include "modfrac/errors.hpp"
#include "modfrac/integer.hpp"

using namespace modfrac;

TEST(Integer, ParsesDecimalAndHex) {
  EXPECT_EQ(parse_integer("17"), 17);
  EXPECT_EQ(parse_integer("-12"), -12);
  EXPECT_EQ(parse_integer("+5"), 5);
  EXPECT_EQ(parse_integer("0x11"), 17);
  EXPECT_EQ(parse_integer("0XfF"), 255);
  EXPECT_EQ(parse_integer("-0x10"), -16);
}

TEST(Integer, LeadingZeroIsDecimal) { EXPECT_EQ(parse_integer("017"), 17); }

TEST(Integer, ParsesBeyondMachineWords) {
  const Integer big = parse_integer(
      "0x10000000000000000000000000000000000000000000000000000000000000000");
  EXPECT_EQ(big, Integer(1) << 256);
  EXPECT_EQ(to_string(big),
            "115792089237316195423570985008687907853269984665640564039457584007913129639936");
  EXPECT_EQ(bit_length(big), 257u);
}

TEST(Integer, RejectsMalformedInput) {
  for (const char* bad : {"", "-", "0x", "12a", "1.5", " 3", "0x1g", "--1"}) {
    EXPECT_THROW(parse_integer(bad), ParseError) << bad;
  }
}

TEST(Integer, FloorModIsNonNegative) {
  EXPECT_EQ(floor_mod(-1, 17), 16);
  EXPECT_EQ(floor_mod(-17, 17), 0);
  EXPECT_EQ(floor_mod(35, 17), 1);
}

TEST(Integer, BitLength) {
  EXPECT_EQ(bit_length(0), 0u);
  EXPECT_EQ(bit_length(1), 1u);
  EXPECT_EQ(bit_length(17), 5u);
  EXPECT_EQ(bit_length(-8), 4u);
}
