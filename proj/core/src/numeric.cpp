#include "disq/numeric.hpp"

#include <algorithm>
#include <charconv>

#include "disq/bitstring.hpp"
#include "disq/error.hpp"

namespace disq {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t parse_u64(std::string_view s, const std::string& whole) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw DomainError("cannot parse rational: '" + whole + "'");
    return v;
}

}  // namespace

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

Rational::Rational(std::uint64_t numerator, std::uint64_t denominator) {
    if (denominator == 0) throw DomainError("rational with zero denominator");
    std::uint64_t g = gcd(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
}

double Rational::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
    std::string_view s = text;
    if (auto slash = s.find('/'); slash != std::string_view::npos)
        return Rational(parse_u64(s.substr(0, slash), text), parse_u64(s.substr(slash + 1), text));
    auto dot = s.find('.');
    if (dot == std::string_view::npos) return Rational(parse_u64(s, text), 1);

    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (frac.size() > 18) throw DomainError("too many decimal places: '" + text + "'");
    std::uint64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    std::uint64_t w = whole.empty() ? 0 : parse_u64(whole, text);
    std::uint64_t f = frac.empty() ? 0 : parse_u64(frac, text);
    return Rational(w * scale + f, scale);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    u128 lhs = static_cast<u128>(a.num_) * b.den_;
    u128 rhs = static_cast<u128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) {
    if (modulus < 2) throw DomainError("mod_pow: modulus must be >= 2");
    std::uint64_t result = 1;
    base %= modulus;
    while (exponent > 0) {
        if (exponent & 1U) result = mul_mod(result, base, modulus);
        base = mul_mod(base, base, modulus);
        exponent >>= 1U;
    }
    return result;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t modulus) {
    if (modulus < 2) throw DomainError("mod_inverse: modulus must be >= 2");
    if (gcd(a % modulus, modulus) != 1) throw DomainError("mod_inverse: argument not a unit");
    // Extended Euclid on signed 128-bit to avoid overflow in the cofactors.
    __int128 old_r = a % modulus, r = modulus;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        __int128 q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
    }
    __int128 m = modulus;
    return static_cast<std::uint64_t>(((old_s % m) + m) % m);
}

std::uint64_t order_oracle(std::uint64_t a, std::uint64_t n) {
    if (n < 2) throw DomainError("order_oracle: N must be >= 2");
    if (a < 1 || a >= n) throw DomainError("order_oracle: a must satisfy 1 <= a < N");
    if (gcd(a, n) != 1) throw DomainError("order_oracle: gcd(a, N) != 1");
    std::uint64_t x = a % n;
    std::uint64_t r = 1;
    while (x != 1) {
        x = mul_mod(x, a, n);
        ++r;
    }
    return r;
}

std::vector<Rational> continued_fraction_convergents(const Rational& x) {
    if (x.numerator() >= x.denominator())
        throw DomainError("continued_fraction_convergents: requires 0 <= x < 1");

    std::vector<Rational> out;
    // h_{k} = a_k h_{k-1} + h_{k-2}, likewise for k; seeds (h_{-1}, h_{-2}) = (1, 0).
    std::uint64_t h_prev = 1, h_prev2 = 0;
    std::uint64_t k_prev = 0, k_prev2 = 1;
    std::uint64_t num = x.numerator();
    std::uint64_t den = x.denominator();
    while (true) {
        std::uint64_t term = num / den;
        std::uint64_t h = term * h_prev + h_prev2;
        std::uint64_t k = term * k_prev + k_prev2;
        out.emplace_back(h, k);
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;
        std::uint64_t rem = num % den;
        if (rem == 0) break;
        num = den;
        den = rem;
    }
    return out;
}

std::optional<std::uint64_t> recover_order(const BitString& m, std::uint64_t n, std::uint64_t a) {
    if (n < 2) throw DomainError("recover_order: N must be >= 2");
    if (gcd(a % n, n) != 1) throw DomainError("recover_order: gcd(a, N) != 1");
    if (m.width() < 1 || m.width() > 62) throw DomainError("recover_order: unsupported width");

    const Rational x(m.value(), std::uint64_t{1} << m.width());
    std::vector<std::uint64_t> candidates;
    for (const Rational& c : continued_fraction_convergents(x)) {
        std::uint64_t q = c.denominator();
        if (q > n) break;
        if (q == 1) {
            candidates.push_back(1);
            continue;
        }
        for (std::uint64_t cq = q; cq <= n; cq += q) candidates.push_back(cq);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (std::uint64_t r : candidates) {
        if (mod_pow(a, r, n) != 1) continue;
        for (std::uint64_t f : prime_factors(r)) {
            while (r % f == 0 && mod_pow(a, r / f, n) == 1) r /= f;
        }
        return r;
    }
    return std::nullopt;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

bool is_prime_power(std::uint64_t n) {
    if (n < 4) return false;
    auto factors = prime_factors(n);
    return factors.size() == 1 && factors.front() != n;
}

int ceil_log2(const Rational& x) {
    if (x.numerator() == 0) throw DomainError("ceil_log2: argument must be positive");
    // Smallest k with num <= 2^k * den.
    int k = 0;
    u128 num = x.numerator();
    u128 den = x.denominator();
    if (num >= den) {
        while ((den << k) < num) ++k;
        return k;
    }
    while ((num << (1 - k)) <= den) --k;
    return k;
}

}  // namespace disq
