#pragma once

// Exact integer and rational arithmetic kernel. Every rationality decision
// in the library reduces to the perfect-square tests defined here.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace pipedlab {

using BigInt = boost::multiprecision::cpp_int;
// Always stored reduced, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;

struct IntSqrt {
    BigInt root;  // floor(sqrt(n))
    bool exact;   // root * root == n
};

// floor square root by Newton iteration on integers.
// Invariant: x starts >= sqrt(n) and decreases strictly until it reaches
// floor(sqrt(n)), at which point y >= x and we stop.
inline BigInt floor_sqrt(const BigInt& n) {
    if (n < 0) throw std::domain_error("floor_sqrt: negative input");
    if (n == 0) return 0;
    const unsigned bits = msb(n);  // n >= 1
    BigInt x = BigInt(1) << (bits / 2 + 1);
    for (;;) {
        BigInt y = (x + n / x) >> 1;
        if (y >= x) return x;
        x = std::move(y);
    }
}

inline IntSqrt int_sqrt(const BigInt& n) {
    BigInt r = floor_sqrt(n);
    bool exact = (r * r == n);
    return {std::move(r), exact};
}

namespace detail {

// Bit i set iff i is a quadratic residue mod 64. Squares mod 64 lie in
// {0,1,4,9,16,17,25,33,36,41,49,57}; the filter rejects ~81% of non-squares
// before the exact test and never changes the result.
inline constexpr std::uint64_t kSquareMod64 =
    (1ULL << 0) | (1ULL << 1) | (1ULL << 4) | (1ULL << 9) | (1ULL << 16) |
    (1ULL << 17) | (1ULL << 25) | (1ULL << 33) | (1ULL << 36) |
    (1ULL << 41) | (1ULL << 49) | (1ULL << 57);

inline bool residue_may_be_square(std::uint64_t low) {
    return (kSquareMod64 >> (low & 63u)) & 1u;
}

}  // namespace detail

inline std::uint64_t isqrt_u64(std::uint64_t n) {
    if (n == 0) return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

inline unsigned __int128 isqrt_u128(unsigned __int128 n) {
    if (n < (static_cast<unsigned __int128>(1) << 64))
        return isqrt_u64(static_cast<std::uint64_t>(n));
    // Seed from the high 64 bits; (isqrt(hi)+1)^2 * 2^64 > n, so x >= sqrt(n).
    unsigned __int128 x =
        (static_cast<unsigned __int128>(
             isqrt_u64(static_cast<std::uint64_t>(n >> 64))) +
         1)
        << 32;
    for (;;) {
        unsigned __int128 y = (x + n / x) >> 1;
        if (y >= x) return x;
        x = y;
    }
}

inline bool is_perfect_square(std::int64_t n) {
    if (n < 0) return false;
    auto u = static_cast<std::uint64_t>(n);
    if (!detail::residue_may_be_square(u)) return false;
    std::uint64_t r = isqrt_u64(u);
    return r * r == u;
}

inline bool is_perfect_square(__int128 n) {
    if (n < 0) return false;
    auto u = static_cast<unsigned __int128>(n);
    if (!detail::residue_may_be_square(static_cast<std::uint64_t>(u))) return false;
    unsigned __int128 r = isqrt_u128(u);
    return r * r == u;
}

inline bool is_perfect_square(const BigInt& n) {
    if (n < 0) return false;
    if (!detail::residue_may_be_square(
            static_cast<std::uint64_t>(n & 0xffffffffffffffffULL)))
        return false;
    return int_sqrt(n).exact;
}

// Exact square root of an integer when one exists.
template <class Int>
std::optional<Int> exact_sqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r;
    if constexpr (std::is_same_v<Int, BigInt>) {
        r = floor_sqrt(n);
    } else if constexpr (std::is_same_v<Int, __int128>) {
        r = static_cast<Int>(isqrt_u128(static_cast<unsigned __int128>(n)));
    } else {
        r = static_cast<Int>(isqrt_u64(static_cast<std::uint64_t>(n)));
    }
    if (r * r == n) return r;
    return std::nullopt;
}

// Rational from a possibly negative denominator; reduction and den > 0 are
// then guaranteed by the representation.
inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

// sqrt of a nonnegative rational, exact or absent. A reduced p/q has a
// rational square root iff p and q are both perfect squares.
inline std::optional<Rational> sqrt_rational(const Rational& q) {
    if (q < 0) throw std::domain_error("sqrt_rational: negative input");
    IntSqrt num = int_sqrt(numerator(q));
    if (!num.exact) return std::nullopt;
    IntSqrt den = int_sqrt(denominator(q));
    if (!den.exact) return std::nullopt;
    return Rational(num.root, den.root);
}

inline bool is_rational_square(const Rational& q) {
    if (q < 0) return false;
    return is_perfect_square(numerator(q)) && is_perfect_square(denominator(q));
}

inline std::string to_string(const BigInt& n) { return n.str(); }

// "p" when integral, "p/q" otherwise.
inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace pipedlab
