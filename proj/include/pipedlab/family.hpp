#pragma once

// The tetrahedron family of a sextuple: the corner tetrahedra of the same
// parallelepiped, generated by the 6 orderings of the basis vectors times
// the 4 sign classes modulo global negation. Negating a basis vector swaps
// the two diagonals of each face it bounds, so each reordered row carries an
// even number of partner-diagonal substitutions x -> sqrt(2(sum) - x^2).
// Rows whose substituted diagonals are irrational (or zero) are excluded
// from the member set but counted.

#include "pipedlab/geometry.hpp"

#include <algorithm>
#include <vector>

namespace pipedlab {

struct TetraFamily {
    EdgeSextuple origin;
    std::vector<EdgeSextuple> members;  // distinct, sorted ascending
    int excluded_rows = 0;              // of the 24, irrational or degenerate
};

namespace detail {

inline constexpr std::array<std::array<int, 3>, 6> kBasisOrders = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

// Even substitution patterns over the row's three diagonal slots.
inline constexpr std::array<std::array<bool, 3>, 4> kSubstitutionPatterns = {{
    {false, false, false},
    {false, true, true},
    {true, false, true},
    {true, true, false},
}};

}  // namespace detail

inline TetraFamily tetra_family(const EdgeSextuple& s) {
    validate_faces(s);

    const std::array<BigInt, 3> basis = {s.a, s.c, s.e};
    const std::array<BigInt, 3> basis_sq = {s.a * s.a, s.c * s.c, s.e * s.e};
    // diagonal of the face spanned by basis pair {i,j}, keyed by i+j-1:
    // {0,1} -> b, {0,2} -> d, {1,2} -> f
    auto face_key = [](int i, int j) { return i + j - 1; };
    const std::array<BigInt, 3> diag = {s.b, s.d, s.f};
    std::array<BigInt, 3> partner_sq;
    std::array<std::optional<BigInt>, 3> partner;
    {
        const std::array<std::array<int, 2>, 3> pairs = {{{0, 1}, {0, 2}, {1, 2}}};
        for (int k = 0; k < 3; ++k) {
            partner_sq[k] = 2 * (basis_sq[pairs[k][0]] + basis_sq[pairs[k][1]]) -
                            diag[k] * diag[k];
            IntSqrt r = int_sqrt(partner_sq[k]);
            if (r.exact && r.root > 0) partner[k] = r.root;
        }
    }

    TetraFamily fam;
    fam.origin = s;
    std::vector<EdgeSextuple> members;
    for (const auto& order : detail::kBasisOrders) {
        const int f12 = face_key(std::min(order[0], order[1]),
                                 std::max(order[0], order[1]));
        const int f13 = face_key(std::min(order[0], order[2]),
                                 std::max(order[0], order[2]));
        const int f23 = face_key(std::min(order[1], order[2]),
                                 std::max(order[1], order[2]));
        for (const auto& sub : detail::kSubstitutionPatterns) {
            const std::array<int, 3> faces = {f12, f13, f23};
            std::array<BigInt, 3> chosen;
            bool ok = true;
            for (int slot = 0; slot < 3 && ok; ++slot) {
                if (sub[slot]) {
                    if (partner[faces[slot]])
                        chosen[slot] = *partner[faces[slot]];
                    else
                        ok = false;
                } else {
                    chosen[slot] = diag[faces[slot]];
                }
            }
            if (!ok) {
                ++fam.excluded_rows;
                continue;
            }
            members.push_back(EdgeSextuple{basis[order[0]], chosen[0],
                                           basis[order[1]], chosen[1],
                                           basis[order[2]], chosen[2]});
        }
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    fam.members = std::move(members);
    return fam;
}

// Lexicographically least family member: deterministic, idempotent, and
// invariant across the family. The dedup key of the search engine.
inline EdgeSextuple canonical_form(const EdgeSextuple& s) {
    return tetra_family(s).members.front();
}

}  // namespace pipedlab
