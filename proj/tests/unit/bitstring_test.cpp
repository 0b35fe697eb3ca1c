#include <random>

#include <gtest/gtest.h>

#include "disq/bitstring.hpp"
#include "disq/error.hpp"
#include "oracles.hpp"

namespace disq {
namespace {

BitString bs(const char* s) { return BitString::parse(s); }

TEST(BitString, TextRoundTrip) {
    EXPECT_EQ(bs("101100").value(), 44U);
    EXPECT_EQ(bs("101100").to_string(), "101100");
    EXPECT_EQ(BitString(4, 1).to_string(), "0001");
    EXPECT_EQ(bs("101100").bit(1), 1);
    EXPECT_EQ(bs("101100").bit(6), 0);
    EXPECT_THROW(BitString(3, 8), DomainError);
    EXPECT_THROW(BitString::parse("10a"), DomainError);
}

TEST(FBits, Examples) {
    EXPECT_EQ(fbits(Rational(53, 64), 1, 3), bs("110"));
    EXPECT_EQ(fbits(Rational(53, 64), 2, 4), bs("101"));
    EXPECT_EQ(fbits(Rational(0, 1), 1, 5), bs("00000"));
    EXPECT_THROW(fbits(Rational(1, 2), 0, 3), DomainError);
    EXPECT_THROW(fbits(Rational(1, 2), 3, 2), DomainError);
}

TEST(FBits, DyadicUsesTerminatingExpansion) {
    EXPECT_EQ(fbits(Rational(1, 2), 1, 4), bs("1000"));
    EXPECT_EQ(fbits(Rational(3, 10), 1, 16).value(), 19660U);
}

TEST(FBits, ConcatCoherence) {
    std::mt19937_64 gen(2);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t den = 1 + gen() % 5000;
        const Rational w(gen() % den, den);
        const int j = 2 + static_cast<int>(gen() % 40);
        const int k = 1 + static_cast<int>(gen() % static_cast<std::uint64_t>(j - 1));
        ASSERT_EQ(concat(fbits(w, 1, k), fbits(w, k + 1, j)), fbits(w, 1, j));
    }
}

TEST(IBits, Examples) {
    EXPECT_EQ(ibits(bs("101100"), 2, 4), bs("011"));
    EXPECT_EQ(ibits(bs("101100"), 1, 6), bs("101100"));
    EXPECT_EQ(ibits(bs("100111"), 2, 3), bs("00"));
    EXPECT_THROW(ibits(bs("101"), 2, 4), DomainError);
    EXPECT_THROW(ibits(bs("101"), 0, 2), DomainError);
}

TEST(CircularDistance, Examples) {
    EXPECT_EQ(circular_distance(bs("001"), bs("111")), 2U);
    EXPECT_EQ(circular_distance(bs("0110"), bs("0110")), 0U);
    EXPECT_EQ(circular_distance(bs("0000"), bs("1111")), 1U);
    EXPECT_THROW(circular_distance(bs("01"), bs("011")), DomainError);
}

TEST(Concat, Examples) {
    EXPECT_EQ(concat(bs("101"), bs("011011011")), bs("101011011011"));
    EXPECT_EQ(concat(BitString(), bs("0110")), bs("0110"));
    EXPECT_EQ(concat(bs("1"), bs("0")), bs("10"));
    EXPECT_THROW(concat(BitString(40, 0), BitString(30, 0)), DomainError);
}

// Distance equals the smallest shift b with (x + b) mod 2^t = y.
TEST(CircularDistance, MatchesShiftSet) {
    std::mt19937_64 gen(7);
    for (int t = 1; t <= 6; ++t)
        for (std::uint64_t x = 0; x < (1U << t); ++x)
            for (std::uint64_t y = 0; y < (1U << t); ++y)
                ASSERT_EQ(circular_distance(BitString(t, x), BitString(t, y)), testing::brute_force_distance(x, y, t));
    for (int i = 0; i < 3000; ++i) {
        const int t = 7 + static_cast<int>(gen() % 6);
        const std::uint64_t x = gen() % (1U << t), y = gen() % (1U << t);
        ASSERT_EQ(circular_distance(BitString(t, x), BitString(t, y)), testing::brute_force_distance(x, y, t));
    }
}

TEST(CircularDistance, IsAMetricExhaustively) {
    for (int t = 1; t <= 6; ++t) {
        const std::uint64_t n = 1U << t;
        for (std::uint64_t x = 0; x < n; ++x) {
            for (std::uint64_t y = 0; y < n; ++y) {
                const auto dxy = circular_distance(BitString(t, x), BitString(t, y));
                ASSERT_EQ(dxy, circular_distance(BitString(t, y), BitString(t, x)));
                ASSERT_EQ(dxy == 0, x == y);
                for (std::uint64_t z = 0; z < n; ++z)
                    ASSERT_LE(dxy, circular_distance(BitString(t, x), BitString(t, z)) +
                                       circular_distance(BitString(t, z), BitString(t, y)));
            }
        }
    }
}

TEST(CircularDistance, TriangleInequalityRandom) {
    std::mt19937_64 gen(9);
    for (int i = 0; i < 100000; ++i) {
        const int t = 1 + static_cast<int>(gen() % 12);
        const std::uint64_t m = (1U << t) - 1;
        const BitString x(t, gen() & m), y(t, gen() & m), z(t, gen() & m);
        ASSERT_LE(circular_distance(x, y), circular_distance(x, z) + circular_distance(z, y));
    }
}

// d_t(x, y) < 2^(t - t0) implies the t0-bit prefixes are within distance 1.
TEST(CircularDistance, PrefixStaysClose) {
    for (int t = 2; t <= 8; ++t)
        for (int t0 = 1; t0 < t; ++t0)
            for (std::uint64_t x = 0; x < (1U << t); ++x)
                for (std::uint64_t y = 0; y < (1U << t); ++y) {
                    const BitString bx(t, x), by(t, y);
                    if (circular_distance(bx, by) >= (std::uint64_t{1} << (t - t0))) continue;
                    ASSERT_LE(circular_distance(ibits(bx, 1, t0), ibits(by, 1, t0)), 1U);
                }
}

// d_t(m, FBits(w,1,t)) < 2^(t-n) bounds the phase error by 2^-n (possibly wrapping).
TEST(CircularDistance, CloseStringsEstimatePhase) {
    std::mt19937_64 gen(21);
    int checked = 0;
    for (int i = 0; i < 20000; ++i) {
        const int t = 2 + static_cast<int>(gen() % 11);
        const int n = 1 + static_cast<int>(gen() % static_cast<std::uint64_t>(t - 1));
        const std::uint64_t den = 1 + gen() % 10000;
        const Rational w(gen() % den, den);
        const BitString m(t, gen() % (1U << t));
        if (circular_distance(m, fbits(w, 1, t)) >= (std::uint64_t{1} << (t - n))) continue;
        ++checked;
        // Exact: |m/2^t - w| = |m den - num 2^t| / (den 2^t)
        const std::int64_t diff = static_cast<std::int64_t>(m.value() * w.denominator()) -
                                  static_cast<std::int64_t>(w.numerator() << t);
        const std::uint64_t ad = static_cast<std::uint64_t>(diff < 0 ? -diff : diff);
        const std::uint64_t full = w.denominator() << t;
        const std::uint64_t circ = std::min(ad, full - ad);
        ASSERT_LE(circ << n, full);
    }
    EXPECT_GT(checked, 1000);
}

}  // namespace
}  // namespace disq
