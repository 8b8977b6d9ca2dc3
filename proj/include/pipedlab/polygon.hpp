#pragma once

// Integer parallelograms and triangles: partner diagonal via the
// parallelogram law 2(a^2+b^2) = d1^2 + d2^2, exact Heron squared areas,
// the six-case rationality taxonomy, and the bounded enumerations behind
// the statistics and "smallest parallelogram" listings.

#include "pipedlab/exact.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace pipedlab {

enum class ParallelogramCase { case1 = 1, case2, case3, case4, case5, case6 };

inline int case_number(ParallelogramCase c) { return static_cast<int>(c); }

struct ParallelogramSpec {
    BigInt side_a, side_b;   // the two side lengths
    BigInt diag1;            // the given integer diagonal
    Rational diag2_squared;  // 2(a^2+b^2) - diag1^2
    Rational area_squared;   // 4 * triangle(a, b, diag1) squared area
};

inline void validate_parallelogram(const BigInt& a, const BigInt& b,
                                   const BigInt& d1) {
    if (a <= 0 || b <= 0 || d1 <= 0)
        throw std::domain_error("parallelogram sides/diagonal must be positive");
    if (abs(a - b) >= d1 || d1 >= a + b)
        throw std::domain_error("no parallelogram with sides " + to_string(a) +
                                "," + to_string(b) + " and diagonal " +
                                to_string(d1));
}

inline Rational second_diagonal_squared(const BigInt& a, const BigInt& b,
                                        const BigInt& d1) {
    validate_parallelogram(a, b, d1);
    return Rational(2 * (a * a + b * b) - d1 * d1);
}

// Exact squared triangle area: (x+y+z)(-x+y+z)(x-y+z)(x+y-z) / 16.
// Zero for degenerate (non-strict boundary) triangles.
inline Rational heron_area_squared(const BigInt& x, const BigInt& y,
                                   const BigInt& z) {
    if (x + y < z || x + z < y || y + z < x)
        throw std::domain_error("triangle inequality violated by (" +
                                to_string(x) + "," + to_string(y) + "," +
                                to_string(z) + ")");
    BigInt p = (x + y + z) * (-x + y + z) * (x - y + z) * (x + y - z);
    return Rational(p, 16);
}

inline ParallelogramSpec make_parallelogram(const BigInt& a, const BigInt& b,
                                            const BigInt& d1) {
    validate_parallelogram(a, b, d1);
    ParallelogramSpec p;
    p.side_a = a;
    p.side_b = b;
    p.diag1 = d1;
    p.diag2_squared = Rational(2 * (a * a + b * b) - d1 * d1);
    p.area_squared = 4 * heron_area_squared(a, b, d1);
    return p;
}

// Integer sides plus one integer diagonal are given, so cases 1 and 4 are
// unreachable; the second diagonal and the area decide among 2/3/5/6.
inline ParallelogramCase classify_parallelogram(const BigInt& a,
                                                const BigInt& b,
                                                const BigInt& d1) {
    validate_parallelogram(a, b, d1);
    bool diag2_rational = is_perfect_square(2 * (a * a + b * b) - d1 * d1);
    BigInt heron16 = (a + b + d1) * (-a + b + d1) * (a - b + d1) * (a + b - d1);
    bool area_rational = is_perfect_square(heron16);
    if (diag2_rational)
        return area_rational ? ParallelogramCase::case6
                             : ParallelogramCase::case3;
    return area_rational ? ParallelogramCase::case5 : ParallelogramCase::case2;
}

struct ParallelogramStats {
    std::uint64_t case2 = 0, case5 = 0, case3 = 0, case6 = 0;
    std::uint64_t case6_right = 0, case6_scalene = 0;
    std::uint64_t total = 0;
};

// Sweep 0 < a <= max_a, 0 < b < a, a-b < c < a+b with (a,b) the sides and c
// one diagonal; tally the four reachable cases and split case 6 into right
// and non-right triangles.
inline ParallelogramStats enumerate_parallelogram_stats(std::int64_t max_a) {
    if (max_a > 10000)
        throw std::domain_error("stats bound too large for 64-bit enumeration");
    ParallelogramStats st;
    for (std::int64_t a = 1; a <= max_a; ++a) {
        for (std::int64_t b = 1; b < a; ++b) {
            const std::int64_t ss2 = 2 * (a * a + b * b);
            for (std::int64_t c = a - b + 1; c < a + b; ++c) {
                ++st.total;
                bool diag = is_perfect_square(ss2 - c * c);
                std::int64_t heron16 =
                    (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c);
                bool area = is_perfect_square(heron16);
                if (diag && area) {
                    ++st.case6;
                    bool right = (a * a + b * b == c * c) ||
                                 (a * a + c * c == b * b) ||
                                 (b * b + c * c == a * a);
                    if (right) ++st.case6_right;
                    else ++st.case6_scalene;
                } else if (diag) {
                    ++st.case3;
                } else if (area) {
                    ++st.case5;
                } else {
                    ++st.case2;
                }
            }
        }
    }
    return st;
}

struct ParallelogramRow {
    std::int64_t a, b, d1, d2;  // a <= b, d1 <= d2
    friend bool operator==(const ParallelogramRow&,
                           const ParallelogramRow&) = default;
};

// All parallelograms with both diagonals integer (case_sel = 3), or both
// diagonals integer and area rational (case_sel = 6), with max side within
// side_bound. Normalized a <= b and d1 <= d2; ordered by (max side, a, b, d1).
inline std::vector<ParallelogramRow> smallest_parallelograms(
    int case_sel, std::int64_t side_bound) {
    if (case_sel != 3 && case_sel != 6)
        throw std::domain_error("case must be 3 or 6");
    if (side_bound > 10000)
        throw std::domain_error("side bound too large for 64-bit enumeration");
    std::vector<ParallelogramRow> rows;
    for (std::int64_t b = 1; b <= side_bound; ++b) {
        for (std::int64_t a = 1; a <= b; ++a) {
            const std::int64_t ss2 = 2 * (a * a + b * b);
            // d1 <= d2 forces d1^2 <= a^2 + b^2.
            for (std::int64_t d1 = b - a + 1; d1 * d1 <= a * a + b * b; ++d1) {
                std::int64_t d2q = ss2 - d1 * d1;
                if (!is_perfect_square(d2q)) continue;
                if (case_sel == 6) {
                    std::int64_t heron16 = (a + b + d1) * (-a + b + d1) *
                                           (a - b + d1) * (a + b - d1);
                    if (!is_perfect_square(heron16)) continue;
                }
                rows.push_back(
                    {a, b, d1, static_cast<std::int64_t>(isqrt_u64(
                                   static_cast<std::uint64_t>(d2q)))});
            }
        }
    }
    // already emitted in (b, a, d1) ascending order = (max side, a, b, d1)
    return rows;
}

}  // namespace pipedlab
