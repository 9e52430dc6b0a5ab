#include <gtest/gtest.h>

#include "paretoscope/error.hpp"
#include "paretoscope/rational.hpp"

using namespace paretoscope;

TEST(Rational, ParsesDecimalsAndFractions) {
  EXPECT_EQ(parse_rational("12"), Rational(12));
  EXPECT_EQ(parse_rational("1.25"), Rational(5, 4));
  EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-2/3"), Rational(-2, 3));
  EXPECT_EQ(parse_rational("0.1") * 3, Rational(3, 10));
}

TEST(Rational, RejectsMalformed) {
  for (const char* bad : {"", "-", "1/0", "1.2.3", "a", "1/", "/2", "1e3", "1."}) {
    EXPECT_FALSE(try_parse_rational(bad).has_value()) << bad;
  }
  EXPECT_THROW(parse_rational("x"), ParseError);
}

TEST(Rational, FormatsInLowestTerms) {
  EXPECT_EQ(to_string(Rational(4, 3)), "4/3");
  EXPECT_EQ(to_string(Rational(6, 3)), "2");
  EXPECT_EQ(to_string(Rational(-1, 3)), "-1/3");
  EXPECT_EQ(to_string(Rational(0)), "0");
}

TEST(Rational, FormatParseRoundTrip) {
  for (int p = -20; p <= 20; ++p) {
    for (int q = 1; q <= 12; ++q) {
      const Rational r(p, q);
      EXPECT_EQ(parse_rational(to_string(r)), r);
    }
  }
}

TEST(Quantity, RejectsNegative) {
  EXPECT_THROW(Quantity(Rational(-1)), Error);
  EXPECT_THROW(Quantity::parse("-1"), ParseError);
  EXPECT_EQ(Quantity::parse("3/6").value(), Rational(1, 2));
  EXPECT_LT(Quantity(1), Quantity(Rational(3, 2)));
}
