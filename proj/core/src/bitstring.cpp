#include "disq/bitstring.hpp"

#include <algorithm>

#include "disq/error.hpp"

namespace disq {

namespace {

constexpr std::uint64_t low_mask(int width) {
    return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

}  // namespace

BitString::BitString(int width, std::uint64_t value) : width_(width), value_(value) {
    if (width < 0 || width > kMaxWidth) throw DomainError("BitString width out of range [0, 64]");
    if ((value & ~low_mask(width)) != 0) throw DomainError("BitString value does not fit its width");
}

BitString BitString::parse(std::string_view bits) {
    if (bits.size() > static_cast<std::size_t>(kMaxWidth)) throw DomainError("BitString longer than 64 bits");
    std::uint64_t v = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw DomainError("BitString text must contain only 0/1");
        v = (v << 1U) | static_cast<std::uint64_t>(c - '0');
    }
    return BitString(static_cast<int>(bits.size()), v);
}

int BitString::bit(int i) const {
    if (i < 1 || i > width_) throw DomainError("BitString bit index out of range");
    return static_cast<int>((value_ >> (width_ - i)) & 1U);
}

std::string BitString::to_string() const {
    std::string out(static_cast<std::size_t>(width_), '0');
    for (int i = 0; i < width_; ++i)
        if ((value_ >> (width_ - 1 - i)) & 1U) out[static_cast<std::size_t>(i)] = '1';
    return out;
}

BitString fbits(const Rational& omega, int i, int j) {
    if (i < 1 || j < i) throw DomainError("fbits: requires 1 <= i <= j");
    if (j - i + 1 > BitString::kMaxWidth) throw DomainError("fbits: slice wider than 64 bits");
    // Long division of the fractional part; the remainder stays below the denominator.
    using u128 = unsigned __int128;
    const u128 den = omega.denominator();
    u128 rem = omega.numerator() % omega.denominator();
    std::uint64_t out = 0;
    for (int k = 1; k <= j; ++k) {
        rem <<= 1U;
        std::uint64_t b = rem >= den ? 1 : 0;
        if (b) rem -= den;
        if (k >= i) out = (out << 1U) | b;
    }
    return BitString(j - i + 1, out);
}

BitString ibits(const BitString& x, int i, int j) {
    if (i < 1 || j < i || j > x.width()) throw DomainError("ibits: requires 1 <= i <= j <= width");
    const int w = j - i + 1;
    return BitString(w, (x.value() >> (x.width() - j)) & low_mask(w));
}

std::uint64_t circular_distance(const BitString& x, const BitString& y) {
    if (x.width() != y.width()) throw DomainError("circular_distance: width mismatch");
    if (x.width() >= 64) throw DomainError("circular_distance: width must be below 64");
    const std::uint64_t diff = x.value() > y.value() ? x.value() - y.value() : y.value() - x.value();
    const std::uint64_t span = std::uint64_t{1} << x.width();
    return std::min(diff, span - diff);
}

BitString concat(const BitString& x, const BitString& y) {
    const int w = x.width() + y.width();
    if (w > BitString::kMaxWidth) throw DomainError("concat: combined width exceeds 64 bits");
    if (y.width() == 64) return y;  // x is empty
    return BitString(w, (x.value() << y.width()) | y.value());
}

}  // namespace disq
