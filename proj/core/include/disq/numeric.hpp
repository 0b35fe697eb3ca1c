#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace disq {

class BitString;

/// Non-negative rational in lowest terms.
///
/// Numerators and denominators are 64-bit. Every value produced by this
/// library stays below 2^48: moduli are at most 2^16 and measurement widths
/// at most 40 bits, so products used in comparisons fit in 128-bit
/// intermediates.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::uint64_t numerator, std::uint64_t denominator);

    std::uint64_t numerator() const { return num_; }
    std::uint64_t denominator() const { return den_; }

    double to_double() const;
    std::string to_string() const;  // "p/q"

    // Parses "p/q", an integer, or a finite decimal such as "0.25".
    static Rational parse(const std::string& text);

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

// base^exponent mod modulus by square-and-multiply; 128-bit products keep any
// 64-bit modulus exact.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus);

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t modulus);

/// Ground-truth multiplicative order by brute-force iteration.
std::uint64_t order_oracle(std::uint64_t a, std::uint64_t n);

/// All convergents of x's continued fraction, ending at x itself. Requires 0 <= x < 1.
std::vector<Rational> continued_fraction_convergents(const Rational& x);

/// Classical post-processing of an order-finding measurement.
///
/// Candidate orders are c*q for every convergent denominator q of m/2^w,
/// with c*q <= n. They are tried in ascending order; the first one with
/// a^{c*q} = 1 (mod n) is reduced to the least divisor that still verifies.
/// A denominator of 1 only proposes the candidate 1. Returns nullopt when
/// nothing verifies.
std::optional<std::uint64_t> recover_order(const BitString& m, std::uint64_t n, std::uint64_t a);

bool is_prime(std::uint64_t n);
// True if n = p^k for a prime p and k >= 2.
bool is_prime_power(std::uint64_t n);

// ceil(log2(x)) for a positive rational, computed exactly.
int ceil_log2(const Rational& x);

}  // namespace disq
