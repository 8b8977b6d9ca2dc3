#pragma once

// Five-class orthogonality scheme. The class of a piped is a function of the
// signs of the three surface-angle cosines at the spanning vertex, i.e. the
// signs of the off-diagonal Gram entries. The closed form below is validated
// against the exhaustive 27-triple vertex-group enumeration.

#include "pipedlab/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string_view>

namespace pipedlab {

enum class PipedClass { acute, obtuse, one_ortho, two_ortho, rectangular };

inline std::string_view class_name(PipedClass c) {
    switch (c) {
        case PipedClass::acute: return "acute";
        case PipedClass::obtuse: return "obtuse";
        case PipedClass::one_ortho: return "1-ortho";
        case PipedClass::two_ortho: return "2-ortho";
        default: return "rectangular";
    }
}

inline std::optional<PipedClass> class_from_name(std::string_view n) {
    if (n == "acute") return PipedClass::acute;
    if (n == "obtuse") return PipedClass::obtuse;
    if (n == "1-ortho") return PipedClass::one_ortho;
    if (n == "2-ortho") return PipedClass::two_ortho;
    if (n == "rectangular") return PipedClass::rectangular;
    return std::nullopt;
}

// Signs of cos(alpha), cos(beta), cos(gamma): alpha between u and v, beta
// between u and w, gamma between v and w.
struct SignVector {
    int s_ab, s_ac, s_bc;  // each in {-1, 0, +1}
    friend bool operator==(const SignVector&, const SignVector&) = default;
};

template <class Int>
SignVector sign_vector_core(const GramCore<Int>& g) {
    auto sgn = [](const Int& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); };
    return {sgn(g.uv), sgn(g.uw), sgn(g.vw)};
}

inline SignVector sign_vector(const GramMatrix& g) {
    auto sgn = [](const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); };
    return {sgn(g.guv), sgn(g.guw), sgn(g.gvw)};
}

// Closed form: count of zeros picks rectangular / 2-ortho / 1-ortho; with no
// right angle, the parity of obtuse angles separates acute from obtuse
// (validated against enumerate_appendix_a, not assumed).
inline PipedClass classify(const SignVector& sv) {
    int zeros = (sv.s_ab == 0) + (sv.s_ac == 0) + (sv.s_bc == 0);
    if (zeros == 3) return PipedClass::rectangular;
    if (zeros == 2) return PipedClass::two_ortho;
    if (zeros == 1) return PipedClass::one_ortho;
    int negatives = (sv.s_ab < 0) + (sv.s_ac < 0) + (sv.s_bc < 0);
    return (negatives % 2 == 0) ? PipedClass::acute : PipedClass::obtuse;
}

using SignTriple = std::array<int, 3>;
using VertexGroup = std::set<SignTriple>;

// Supplement-substitution of the origin's three angle signs over all eight
// vertices; each triple is sorted so congruent vertices coincide.
inline VertexGroup vertex_groups(const SignVector& sv) {
    const int a1 = sv.s_ab, a2 = sv.s_ac, a3 = sv.s_bc;
    const std::array<SignTriple, 8> per_vertex = {{
        {a1, a2, a3},     // v1
        {-a1, -a2, a3},   // v2
        {-a1, -a3, a2},   // v3
        {a1, -a3, -a2},   // v4
        {-a2, -a3, a1},   // v5
        {a2, -a3, -a1},   // v6
        {a3, -a2, -a1},   // v7
        {a3, a2, a1},     // v8
    }};
    VertexGroup group;
    for (SignTriple t : per_vertex) {
        std::sort(t.begin(), t.end());
        group.insert(t);
    }
    return group;
}

// All 27 sign triples -> vertex group. Exactly five distinct groups appear;
// this is the executable form of the five-class proof.
inline std::map<SignTriple, VertexGroup> enumerate_appendix_a() {
    std::map<SignTriple, VertexGroup> out;
    for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j)
            for (int k = -1; k <= 1; ++k)
                out[{i, j, k}] = vertex_groups(SignVector{i, j, k});
    return out;
}

// The five groups as printed in the class table, keyed by class.
inline const std::map<PipedClass, VertexGroup>& canonical_vertex_groups() {
    static const std::map<PipedClass, VertexGroup> groups = {
        {PipedClass::rectangular, {{0, 0, 0}}},
        {PipedClass::two_ortho, {{-1, 0, 0}, {0, 0, 1}}},
        {PipedClass::one_ortho, {{-1, -1, 0}, {-1, 0, 1}, {0, 1, 1}}},
        {PipedClass::obtuse, {{-1, -1, -1}, {-1, 1, 1}}},
        {PipedClass::acute, {{-1, -1, 1}, {1, 1, 1}}},
    };
    return groups;
}

inline std::optional<PipedClass> class_from_group(const VertexGroup& g) {
    for (const auto& [cls, group] : canonical_vertex_groups())
        if (group == g) return cls;
    return std::nullopt;
}

}  // namespace pipedlab
