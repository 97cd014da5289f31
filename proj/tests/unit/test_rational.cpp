#include <gtest/gtest.h>

#include <stdexcept>

#include "phaseless/rational.hpp"

namespace phaseless {
namespace {

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
    EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
    EXPECT_EQ(parse_rational("-6/8"), Rational(-3, 4));
    EXPECT_EQ(parse_rational("7"), Rational(7));
    EXPECT_EQ(parse_rational("+2"), Rational(2));
    EXPECT_EQ(parse_rational("-0.125"), Rational(-1, 8));
    EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
    EXPECT_EQ(parse_rational("2."), Rational(2));
    EXPECT_EQ(parse_rational("010/3"), Rational(10, 3));
    EXPECT_EQ(parse_rational("-007"), Rational(-7));
    EXPECT_EQ(parse_rational("0.0625"), Rational(1, 16));
}

TEST(Rational, RejectsMalformedText) {
    for (const char* bad : {"", "/", "1/0", "1/-2", "abc", "1.2.3", "1/2/3", "--1", ".", "0x10", " 1"}) {
        EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
    }
}

TEST(Rational, FormatsLowestTermsWithPositiveDenominator) {
    EXPECT_EQ(format_rational(Rational(-6, 8)), "-3/4");
    EXPECT_EQ(format_rational(Rational(3)), "3/1");
    EXPECT_EQ(format_rational(Rational(0)), "0/1");
    EXPECT_EQ(parse_rational(format_rational(Rational(-22, 7))), Rational(-22, 7));
}

TEST(Rational, FloorAndCeilRoundTowardInfinities) {
    EXPECT_EQ(floor_to_int(Rational(7, 2)), 3);
    EXPECT_EQ(ceil_to_int(Rational(7, 2)), 4);
    EXPECT_EQ(floor_to_int(Rational(-7, 2)), -4);
    EXPECT_EQ(ceil_to_int(Rational(-7, 2)), -3);
    EXPECT_EQ(floor_to_int(Rational(-3)), -3);
    EXPECT_EQ(ceil_to_int(Rational(5)), 5);
}

TEST(Rational, HelpersOnSignAndIntegrality) {
    EXPECT_TRUE(is_integer(Rational(4, 2)));
    EXPECT_FALSE(is_integer(Rational(1, 3)));
    EXPECT_EQ(abs(Rational(-2, 5)), Rational(2, 5));
    EXPECT_EQ(sign(Rational(-2, 5)), -1);
    EXPECT_EQ(sign(Rational(0)), 0);
}

}  // namespace
}  // namespace phaseless
