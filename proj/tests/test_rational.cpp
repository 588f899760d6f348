#include <gtest/gtest.h>

#include "symtorus/rational.hpp"

using symtorus::Integer;
using symtorus::Rational;

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(Rational::parse("3/6"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("-4"), Rational(-4));
  EXPECT_EQ(Rational::parse(" -7/14 "), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("+5"), Rational(5));
}

TEST(Rational, RejectsMalformedLiterals) {
  EXPECT_THROW(Rational::parse("1/0"), symtorus::parse_error);
  EXPECT_THROW(Rational::parse("abc"), symtorus::parse_error);
  EXPECT_THROW(Rational::parse(""), symtorus::parse_error);
  EXPECT_THROW(Rational::parse("1/2/3"), symtorus::parse_error);
}

TEST(Rational, DecimalLiteralIsExact) {
  EXPECT_EQ(Rational::parse("0.25"), Rational(1, 4));
  EXPECT_EQ(Rational::parse("-1.5"), Rational(-3, 2));
}

TEST(Rational, LowestTermsAndPositiveDenominator) {
  Rational r(Integer(6), Integer(-4));
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(r.str(), "-3/2");
}

TEST(Rational, FloorCeil) {
  EXPECT_EQ(Rational(-3, 2).floor(), -2);
  EXPECT_EQ(Rational(-3, 2).ceil(), -1);
  EXPECT_EQ(Rational(4).floor(), 4);
}

TEST(Rational, SqrtBoundsEncloseAndAreExactOnSquares) {
  auto [lo, hi] = symtorus::sqrt_bounds(Rational(2), 40);
  EXPECT_LE(lo * lo, Rational(2));
  EXPECT_GE(hi * hi, Rational(2));
  auto [a, b] = symtorus::sqrt_bounds(Rational(9, 4));
  EXPECT_EQ(a, Rational(3, 2));
  EXPECT_EQ(b, Rational(3, 2));
}

TEST(Rational, LongDoubleConversionKeepsExtendedPrecision) {
  Rational third(1, 3);
  long double v = third.to_long_double();
  EXPECT_NEAR(static_cast<double>(v * 3 - 1), 0.0, 1e-18);
  Rational big(Integer("123456789012345678901234567890"), Integer("7"));
  EXPECT_NEAR(static_cast<double>(big.to_long_double() / 1.7636684144620811271604938270e28L), 1.0, 1e-15);
}
