#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <string_view>

#include "disq/numeric.hpp"

namespace disq {

/// Fixed-width bit string, at most 64 bits.
///
/// Bits are addressed 1-based from the most significant end, so for
/// "101100" bit 1 is '1' and bit 6 is '0'. The string and its binary
/// integer value are used interchangeably.
class BitString {
public:
    static constexpr int kMaxWidth = 64;

    constexpr BitString() = default;
    BitString(int width, std::uint64_t value);

    static BitString parse(std::string_view bits);

    int width() const { return width_; }
    std::uint64_t value() const { return value_; }

    // Bit at 1-based position i, most significant first.
    int bit(int i) const;

    std::string to_string() const;

    friend bool operator==(const BitString&, const BitString&) = default;
    friend auto operator<=>(const BitString&, const BitString&) = default;

private:
    int width_ = 0;
    std::uint64_t value_ = 0;
};

/// Bits i..j of the binary expansion of omega's fractional part. Dyadic
/// values use the terminating expansion (0.1, never 0.0111...).
BitString fbits(const Rational& omega, int i, int j);

/// Sub-string of x from bit i to bit j inclusive.
BitString ibits(const BitString& x, int i, int j);

/// Circular distance min(|x-y|, 2^t - |x-y|) between two t-bit strings.
std::uint64_t circular_distance(const BitString& x, const BitString& y);

BitString concat(const BitString& x, const BitString& y);

}  // namespace disq
