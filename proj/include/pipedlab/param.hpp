#pragma once

// Parametric generators: four-parameter Heron triangles and five-parameter
// rational parallelograms with two rational diagonals.
//
// The printed parametric area for the Heron family carries a spurious factor
// of 4 relative to Heron's formula ((1,2,1,3) gives sides 20,15,25 whose
// area is 150, not 600); the generator therefore reports the Heron-derived
// value, and the derived law |m n p q (mq+np)(nq-mp)| is verified against it.

#include "pipedlab/polygon.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace pipedlab {

struct HeronParams {
    BigInt m, n, p, q;
};

struct WyssParams {
    BigInt k, m, n, p, q;
};

struct HeronTriangle {
    BigInt a, b, c;
    Rational area_squared;
};

inline std::array<BigInt, 3> heron_sides_raw(const HeronParams& hp) {
    return {hp.m * hp.n * (hp.p * hp.p + hp.q * hp.q),
            hp.p * hp.q * (hp.m * hp.m + hp.n * hp.n),
            hp.p * hp.q * (hp.n * hp.n - hp.m * hp.m) +
                hp.m * hp.n * (hp.q * hp.q - hp.p * hp.p)};
}

// The area the parametric family is supposed to produce (without the
// spurious factor of 4): |m n p q (mq + np)(nq - mp)|.
inline BigInt heron_area_param_law(const HeronParams& hp) {
    return abs(hp.m * hp.n * hp.p * hp.q * (hp.m * hp.q + hp.n * hp.p) *
               (hp.n * hp.q - hp.m * hp.p));
}

inline bool heron_in_domain(const HeronParams& hp) {
    if (hp.m <= 0 || hp.n <= 0 || hp.p <= 0 || hp.q <= 0) return false;
    auto s = heron_sides_raw(hp);
    for (auto& side : s) side = abs(side);
    if (s[0] == 0 || s[1] == 0 || s[2] == 0) return false;
    return s[0] + s[1] >= s[2] && s[0] + s[2] >= s[1] && s[1] + s[2] >= s[0];
}

inline HeronTriangle heron_triangle(const HeronParams& hp) {
    if (!heron_in_domain(hp))
        throw std::domain_error("Heron parameters out of domain");
    auto s = heron_sides_raw(hp);
    for (auto& side : s) side = abs(side);
    HeronTriangle t{s[0], s[1], s[2], heron_area_squared(s[0], s[1], s[2])};
    return t;
}

// Raw side/diagonal values (possibly negative): a, b, c, d with
// 2(a^2 + b^2) = c^2 + d^2 holding identically for every integer tuple.
inline std::array<BigInt, 4> wyss_raw(const WyssParams& wp) {
    return {wp.k * (wp.n * wp.q - wp.m * wp.p),
            wp.k * (wp.m * wp.q + wp.n * wp.p),
            wp.k * (wp.p * (wp.m - wp.n) + wp.q * (wp.m + wp.n)),
            wp.k * (wp.p * (wp.n + wp.m) + wp.q * (wp.n - wp.m))};
}

inline bool wyss_in_domain(const WyssParams& wp) {
    if (wp.k <= 0 || wp.m <= 0 || wp.n <= 0 || wp.p <= 0 || wp.q <= 0)
        return false;
    auto r = wyss_raw(wp);
    BigInt a = abs(r[0]), b = abs(r[1]), c = abs(r[2]), d = abs(r[3]);
    if (a == 0 || b == 0 || c == 0 || d == 0) return false;
    BigInt lo = c < d ? c : d, hi = c < d ? d : c;
    return abs(a - b) < lo && hi < a + b;
}

// Both diagonals rational by construction (a case 3 or case 6 parallelogram).
inline ParallelogramSpec wyss_parallelogram(const WyssParams& wp) {
    if (!wyss_in_domain(wp))
        throw std::domain_error("parallelogram parameters out of domain");
    auto r = wyss_raw(wp);
    return make_parallelogram(abs(r[0]), abs(r[1]), abs(r[2]));
}

// Deterministic exhaustive parameter sweeps, ordered by increasing parameter
// sum and lexicographically within a sum.
inline std::vector<HeronParams> heron_param_sweep(std::size_t count) {
    std::vector<HeronParams> out;
    out.reserve(count);
    for (long total = 4; out.size() < count; ++total)
        for (long m = 1; m <= total - 3 && out.size() < count; ++m)
            for (long n = 1; n <= total - m - 2 && out.size() < count; ++n)
                for (long p = 1; p <= total - m - n - 1 && out.size() < count;
                     ++p)
                    out.push_back({m, n, p, total - m - n - p});
    return out;
}

inline std::vector<WyssParams> wyss_param_sweep(std::size_t count) {
    std::vector<WyssParams> out;
    out.reserve(count);
    for (long total = 5; out.size() < count; ++total)
        for (long k = 1; k <= total - 4 && out.size() < count; ++k)
            for (long m = 1; m <= total - k - 3 && out.size() < count; ++m)
                for (long n = 1; n <= total - k - m - 2 && out.size() < count;
                     ++n)
                    for (long p = 1;
                         p <= total - k - m - n - 1 && out.size() < count; ++p)
                        out.push_back({k, m, n, p, total - k - m - n - p});
    return out;
}

// First `count` tuples of the sweeps that lie in the generator domain.
inline std::vector<HeronParams> heron_in_domain_sweep(std::size_t count) {
    std::vector<HeronParams> out;
    out.reserve(count);
    for (long total = 4; out.size() < count; ++total)
        for (long m = 1; m <= total - 3 && out.size() < count; ++m)
            for (long n = 1; n <= total - m - 2 && out.size() < count; ++n)
                for (long p = 1; p <= total - m - n - 1 && out.size() < count;
                     ++p) {
                    HeronParams hp{m, n, p, total - m - n - p};
                    if (heron_in_domain(hp)) out.push_back(hp);
                }
    return out;
}

inline std::vector<WyssParams> wyss_in_domain_sweep(std::size_t count) {
    std::vector<WyssParams> out;
    out.reserve(count);
    for (long total = 5; out.size() < count; ++total)
        for (long k = 1; k <= total - 4 && out.size() < count; ++k)
            for (long m = 1; m <= total - k - 3 && out.size() < count; ++m)
                for (long n = 1; n <= total - k - m - 2 && out.size() < count;
                     ++n)
                    for (long p = 1;
                         p <= total - k - m - n - 1 && out.size() < count;
                         ++p) {
                        WyssParams wp{k, m, n, p, total - k - m - n - p};
                        if (wyss_in_domain(wp)) out.push_back(wp);
                    }
    return out;
}

}  // namespace pipedlab
