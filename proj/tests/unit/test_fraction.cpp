#include <snakecf/error.hpp>
#include <snakecf/fraction.hpp>

#include <gtest/gtest.h>

using namespace snakecf;

TEST(Fraction, ReducesAndNormalizesSign) {
    const Fraction f(6, -4);
    EXPECT_EQ(f.num(), -3);
    EXPECT_EQ(f.den(), 2);
    EXPECT_EQ(f.to_string(), "-3/2");
    EXPECT_EQ(Fraction(0, 5), Fraction(0));
}

TEST(Fraction, ZeroDenominatorIsDomainError) {
    try {
        Fraction(1, 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::domain);
    }
}

TEST(Fraction, Arithmetic) {
    const Fraction a(1, 2);
    const Fraction b(1, 3);
    EXPECT_EQ(a + b, Fraction(5, 6));
    EXPECT_EQ(a - b, Fraction(1, 6));
    EXPECT_EQ(a * b, Fraction(1, 6));
    EXPECT_EQ(a / b, Fraction(3, 2));
    EXPECT_EQ(-a, Fraction(-1, 2));
    EXPECT_EQ(Fraction(-2, 3).reciprocal(), Fraction(-3, 2));
    EXPECT_THROW((void)Fraction(0).reciprocal(), Error);
}

TEST(Fraction, BigValuesStayExact) {
    const BigInt big("56790444570379838361685067712119508786523129590198509");
    const Fraction f(big * 3, big * 7);
    EXPECT_EQ(f, Fraction(3, 7));
}

TEST(Fraction, Helpers) {
    EXPECT_EQ(floor_div(7, 2), 3);
    EXPECT_EQ(floor_div(-7, 2), -4);
    EXPECT_EQ(floor_div(7, -2), -4);
    EXPECT_EQ(floor_div(-8, 2), -4);
    EXPECT_EQ(gcd(84, 36), 12);
    EXPECT_EQ(isqrt(BigInt(99)), 9);
    EXPECT_EQ(isqrt(BigInt(100)), 10);
    EXPECT_THROW((void)isqrt(BigInt(-1)), Error);
}
