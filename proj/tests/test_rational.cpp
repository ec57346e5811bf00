#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "radial/rational.hpp"

namespace radial {
namespace {

TEST(Rational, NormalizesSignAndGcd) {
    const Rational r(6, -4);
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(Rational(0, -7), Rational(0));
    EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, FloorCeilFrac) {
    EXPECT_EQ(Rational(7, 2).floor(), 3);
    EXPECT_EQ(Rational(7, 2).ceil(), 4);
    EXPECT_EQ(Rational(-7, 2).floor(), -4);
    EXPECT_EQ(Rational(-7, 2).ceil(), -3);
    EXPECT_EQ(Rational(-1, 3).frac(), Rational(2, 3));
    EXPECT_EQ(Rational(5).frac(), Rational(0));
    EXPECT_TRUE(Rational(4, 2).is_integer());
    EXPECT_FALSE(Rational(3, 2).is_integer());
}

TEST(Rational, Ordering) {
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
    EXPECT_EQ(Rational(2, 6), Rational(1, 3));
}

TEST(Rational, OverflowIsReported) {
    const Rational big(std::numeric_limits<std::int64_t>::max() / 2 + 1);
    EXPECT_THROW(big * Rational(4), std::overflow_error);
}

// Field identities against a 128-bit cross-multiplication oracle.
TEST(Rational, RandomArithmeticMatchesWideOracle) {
    std::mt19937_64 rng(11);
    auto pick = [&] {
        const auto n = static_cast<std::int64_t>(rng() % 2001) - 1000;
        const auto d = static_cast<std::int64_t>(rng() % 999) + 1;
        return Rational(n, d);
    };
    __extension__ typedef __int128 wide;
    for (int i = 0; i < 2000; ++i) {
        const Rational a = pick();
        const Rational b = pick();
        const Rational s = a + b;
        EXPECT_EQ(static_cast<wide>(s.num()) * a.den() * b.den(),
                  (static_cast<wide>(a.num()) * b.den() + static_cast<wide>(b.num()) * a.den()) * s.den());
        const Rational p = a * b;
        EXPECT_EQ(static_cast<wide>(p.num()) * a.den() * b.den(), static_cast<wide>(a.num()) * b.num() * p.den());
        EXPECT_EQ(a - b + b, a);
        if (b != Rational(0)) {
            EXPECT_EQ(a / b * b, a);
        }
        EXPECT_EQ(a < b, static_cast<wide>(a.num()) * b.den() < static_cast<wide>(b.num()) * a.den());
        EXPECT_LE(Rational(a.floor()), a);
        EXPECT_LT(a, Rational(a.floor() + 1));
    }
}

}  // namespace
}  // namespace radial
