#include <gtest/gtest.h>

#include "lvrough/rational.hpp"

using lvrough::Rational;

TEST(Rational, ParsesFractions) {
  EXPECT_EQ(Rational::parse("3/10"), Rational(3, 10));
  EXPECT_EQ(Rational::parse("-1/2"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("4/8"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("1"), Rational(1));
  EXPECT_EQ(Rational::parse("0"), Rational(0));
}

TEST(Rational, ParsesDecimalsExactly) {
  EXPECT_EQ(Rational::parse("0.3"), Rational(3, 10));
  EXPECT_EQ(Rational::parse("0.25"), Rational(1, 4));
  EXPECT_EQ(Rational::parse("1.5"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("-0.5"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("0.100"), Rational(1, 10));
}

TEST(Rational, Normalizes) {
  EXPECT_EQ(Rational(2, 4).str(), "1/2");
  EXPECT_EQ(Rational(3, -6).str(), "-1/2");
  EXPECT_EQ(Rational(7, 1).str(), "7");
  EXPECT_EQ(Rational(0, 5), Rational(0));
}

TEST(Rational, Orders) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_LE(Rational(1, 2), Rational(2, 4));
  EXPECT_FALSE(Rational(3, 4) < Rational(1, 2));
}

TEST(Rational, RejectsBadInput) {
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1.2.3"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/2/3"), std::invalid_argument);
  EXPECT_THROW(Rational(1, 0), std::invalid_argument);
}

TEST(Rational, RoundTripsStrings) {
  for (const char* s : {"0", "1", "3/10", "-1/2", "7/8"})
    EXPECT_EQ(Rational::parse(Rational::parse(s).str()), Rational::parse(s));
}
