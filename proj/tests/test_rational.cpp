// Copyright (c) weighted-pebbling contributors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <limits>
#include <sstream>
#include <unordered_set>

#include "wpeb/ext_count.hpp"
#include "wpeb/rational.hpp"

using wpeb::ExtCount;
using wpeb::Rational;

TEST(Rational, ReducesToLowestTermsWithPositiveDenominator) {
    EXPECT_EQ(Rational(6, 8).num(), 3);
    EXPECT_EQ(Rational(6, 8).den(), 4);
    EXPECT_EQ(Rational(3, -9), Rational(-1, 3));
    EXPECT_EQ(Rational(0, 5), Rational(0));
    EXPECT_EQ(Rational(0, 5).den(), 1);
    EXPECT_THROW(Rational(1, 0), std::exception);
}

TEST(Rational, Arithmetic) {
    EXPECT_EQ(Rational(1, 3) + Rational(1, 2), Rational(5, 6));
    EXPECT_EQ(Rational(1, 3) - Rational(1, 2), Rational(-1, 6));
    EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
    EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
    EXPECT_EQ(Rational(5, 7).reciprocal(), Rational(7, 5));
    Rational acc;
    for (int i = 0; i < 6; ++i) acc += Rational(1, 6);
    EXPECT_EQ(acc, Rational(1));
}

TEST(Rational, OrderingUsesCrossMultiplication) {
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_LT(Rational(-1, 2), Rational(0));
    EXPECT_GT(Rational(371, 190), Rational(39, 20));
    EXPECT_EQ(Rational(2, 4) <=> Rational(1, 2), std::strong_ordering::equal);
}

TEST(Rational, FloorAndCeil) {
    EXPECT_EQ(Rational(7, 2).floor(), 3);
    EXPECT_EQ(Rational(7, 2).ceil(), 4);
    EXPECT_EQ(Rational(-7, 2).floor(), -4);
    EXPECT_EQ(Rational(-7, 2).ceil(), -3);
    EXPECT_EQ(Rational(4).floor(), 4);
    EXPECT_EQ(Rational(4).ceil(), 4);
}

TEST(Rational, FloorTimesMatchesDefinition) {
    for (std::int64_t den = 1; den <= 12; ++den) {
        for (std::int64_t num = 0; num <= den; ++num) {
            const Rational w(num, den);
            for (std::int64_t k = 0; k <= 40; ++k) EXPECT_EQ(w.floor_times(k), (k * num) / den);
        }
    }
}

TEST(Rational, CeilDivIsSmallestSufficientCount) {
    // ceil_div(n, w) is the least k with floor(k w) >= n.
    for (std::int64_t den = 1; den <= 9; ++den) {
        for (std::int64_t num = 1; num <= den; ++num) {
            const Rational w(num, den);
            for (std::int64_t n = 1; n <= 20; ++n) {
                const std::int64_t k = wpeb::ceil_div(n, w);
                EXPECT_GE(w.floor_times(k), n);
                EXPECT_LT(w.floor_times(k - 1), n);
            }
        }
    }
}

TEST(Rational, ParseAndPrintRoundTrip) {
    EXPECT_EQ(Rational::parse("371/190"), Rational(371, 190));
    EXPECT_EQ(Rational::parse("2"), Rational(2));
    EXPECT_EQ(Rational::parse("-3/6"), Rational(-1, 2));
    EXPECT_EQ(Rational(371, 190).to_string(), "371/190");
    EXPECT_EQ(Rational(4, 2).to_string(), "2");
    std::ostringstream out;
    out << Rational(5, 6);
    EXPECT_EQ(out.str(), "5/6");
    for (const char* bad : {"", "1/", "/2", "a", "1/0", "1.5", "15//62", "2/3x"}) {
        EXPECT_THROW(static_cast<void>(Rational::parse(bad)), std::invalid_argument) << bad;
    }
}

TEST(Rational, OverflowThrowsInsteadOfWrapping) {
    const std::int64_t big = std::numeric_limits<std::int64_t>::max() / 2;
    EXPECT_THROW(static_cast<void>(Rational(big) * Rational(4)), wpeb::OverflowError);
    EXPECT_THROW(static_cast<void>(Rational(1, big) + Rational(1, big - 1)), wpeb::OverflowError);
}

TEST(Rational, Hashable) {
    std::unordered_set<Rational> s{Rational(1, 2), Rational(2, 4), Rational(1, 3)};
    EXPECT_EQ(s.size(), 2U);
}

TEST(ExtCount, InfinityOrdersAboveEverything) {
    EXPECT_LT(ExtCount(5), ExtCount::infinite());
    EXPECT_EQ(ExtCount::infinite(), ExtCount::infinite());
    EXPECT_GT(ExtCount::infinite(), std::int64_t{1} << 60);
    EXPECT_EQ(ExtCount(3), 3);
    EXPECT_EQ(ExtCount::infinite().to_string(), "inf");
    EXPECT_EQ(ExtCount(12).to_string(), "12");
    EXPECT_THROW(static_cast<void>(ExtCount::infinite().value()), std::logic_error);
    EXPECT_THROW(ExtCount(-1), std::invalid_argument);
}
