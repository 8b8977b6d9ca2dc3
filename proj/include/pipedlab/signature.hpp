#pragma once

// The 27-component rationality signature of a Diophantine parallelepiped and
// its reduction to per-group counts (the census category key).
//
// Slot order (normative for this library; serialized left to right):
//   edges      3   a, c, e
//   skew       4   triangles 146, 147, 167, 467
//   face_diag  6   b, b-hat, d, d-hat, f, f-hat   (x-hat^2 = 2*sum - x^2)
//   body_diag  4   coefficients (1,1,1), (-1,1,1), (1,-1,1), (1,1,-1)
//   face_area  3   |u x v|, |u x w|, |v x w|
//   body_area  6   B1278, B1368, B1458, B2367, B2457, B3456
//   volume     1   ternary: -1 zero volume, 0 irrational, 1 rational
//
// Serialization: 27 characters, 26 of '0'/'1' followed by '-', '0' or '1'.

#include "pipedlab/geometry.hpp"

#include <compare>
#include <optional>
#include <string>

namespace pipedlab {

struct ComponentSignature {
    std::array<bool, 3> edges{};
    std::array<bool, 4> skew{};
    std::array<bool, 6> face_diag{};
    std::array<bool, 4> body_diag{};
    std::array<bool, 3> face_area{};
    std::array<bool, 6> body_area{};
    int volume = 0;  // -1, 0, 1

    friend bool operator==(const ComponentSignature&,
                           const ComponentSignature&) = default;
};

struct CategoryKey {
    int skew = 0, face_diag = 0, body_diag = 0, face_area = 0, body_area = 0;
    int volume = 0;
    friend auto operator<=>(const CategoryKey&, const CategoryKey&) = default;
};

inline constexpr std::array<Coeffs, 6> kFaceDiagCoeffs = {{
    {1, -1, 0}, {1, 1, 0}, {1, 0, -1}, {1, 0, 1}, {0, 1, -1}, {0, 1, 1},
}};

inline constexpr std::array<Coeffs, 4> kBodyDiagCoeffs = {{
    {1, 1, 1}, {-1, 1, 1}, {1, -1, 1}, {1, 1, -1},
}};

inline constexpr std::array<std::array<Coeffs, 2>, 3> kFaceParallelograms = {{
    {{{1, 0, 0}, {0, 1, 0}}},
    {{{1, 0, 0}, {0, 0, 1}}},
    {{{0, 1, 0}, {0, 0, 1}}},
}};

// det(G) = det8/8 is a square in Q iff the reduced denominator (8 / gcd) and
// the odd part both are; only det8 = 8k with k square, or det8 = 2m with m
// odd and square, qualify.
template <class Int>
int volume_flag_core(const Int& det8) {
    if (det8 == 0) return -1;
    if (det8 % 8 == 0 && is_perfect_square(Int(det8 / 8))) return 1;
    if (det8 % 4 == 2 && is_perfect_square(Int(det8 / 2))) return 1;
    return 0;
}

// Signature straight from the integer Gram core. Precondition: faces valid.
// Throws on a negative determinant (non-embeddable edge data).
template <class Int>
ComponentSignature compute_signature_core(const GramCore<Int>& g) {
    ComponentSignature sig;
    sig.edges = {is_perfect_square(g.aa), is_perfect_square(g.cc),
                 is_perfect_square(g.ee)};
    for (size_t i = 0; i < kSkewTriangles.size(); ++i)
        sig.skew[i] = is_perfect_square(
            area_quad_core(g, kSkewTriangles[i][0], kSkewTriangles[i][1]));
    for (size_t i = 0; i < kFaceDiagCoeffs.size(); ++i)
        sig.face_diag[i] =
            is_perfect_square(squared_length_core(g, kFaceDiagCoeffs[i]));
    for (size_t i = 0; i < kBodyDiagCoeffs.size(); ++i)
        sig.body_diag[i] =
            is_perfect_square(squared_length_core(g, kBodyDiagCoeffs[i]));
    for (size_t i = 0; i < kFaceParallelograms.size(); ++i)
        sig.face_area[i] = is_perfect_square(area_quad_core(
            g, kFaceParallelograms[i][0], kFaceParallelograms[i][1]));
    for (size_t i = 0; i < kBodyParallelograms.size(); ++i)
        sig.body_area[i] = is_perfect_square(area_quad_core(
            g, kBodyParallelograms[i][0], kBodyParallelograms[i][1]));
    Int det8 = det8_core(g);
    if (det8 < 0)
        throw invalid_tetrahedron(
            "negative Gram determinant: edges admit no tetrahedron");
    sig.volume = volume_flag_core(det8);
    return sig;
}

inline ComponentSignature compute_signature(const EdgeSextuple& s) {
    validate_faces(s);
    return compute_signature_core(gram_core(s));
}

inline CategoryKey category_of(const ComponentSignature& sig) {
    auto count = [](const auto& flags) {
        int n = 0;
        for (bool b : flags) n += b;
        return n;
    };
    return {count(sig.skew), count(sig.face_diag), count(sig.body_diag),
            count(sig.face_area), count(sig.body_area), sig.volume};
}

// Perfect: all 6 face diagonals and all 4 body diagonals rational.
inline bool is_perfect(const ComponentSignature& sig) {
    for (bool b : sig.face_diag)
        if (!b) return false;
    for (bool b : sig.body_diag)
        if (!b) return false;
    return true;
}

inline std::string to_string(const ComponentSignature& sig) {
    std::string out;
    out.reserve(27);
    auto put = [&out](const auto& flags) {
        for (bool b : flags) out.push_back(b ? '1' : '0');
    };
    put(sig.edges);
    put(sig.skew);
    put(sig.face_diag);
    put(sig.body_diag);
    put(sig.face_area);
    put(sig.body_area);
    out.push_back(sig.volume < 0 ? '-' : (sig.volume == 0 ? '0' : '1'));
    return out;
}

inline std::optional<ComponentSignature> signature_from_string(
    std::string_view s) {
    if (s.size() != 27) return std::nullopt;
    ComponentSignature sig;
    size_t pos = 0;
    auto get = [&](auto& flags) {
        for (auto& b : flags) {
            char c = s[pos++];
            if (c != '0' && c != '1') return false;
            b = (c == '1');
        }
        return true;
    };
    if (!get(sig.edges) || !get(sig.skew) || !get(sig.face_diag) ||
        !get(sig.body_diag) || !get(sig.face_area) || !get(sig.body_area))
        return std::nullopt;
    char v = s[pos];
    if (v == '-') sig.volume = -1;
    else if (v == '0') sig.volume = 0;
    else if (v == '1') sig.volume = 1;
    else return std::nullopt;
    return sig;
}

}  // namespace pipedlab
