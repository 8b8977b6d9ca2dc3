#pragma once

// Six integer tetrahedron edges -> exact Gram matrix of the three spanning
// vectors u, v, w, and every squared length / squared area / squared volume
// of the parallelepiped they span.
//
// Edge convention: |u| = a, |v| = c, |w| = e; b joins the tips of u and v,
// d the tips of u and w, f the tips of v and w. All rationality questions
// are decided on squared quantities; surd coordinates never appear.

#include "pipedlab/exact.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace pipedlab {

struct EdgeSextuple {
    BigInt a, b, c, d, e, f;

    const BigInt& edge(int i) const {
        switch (i) {
            case 0: return a;
            case 1: return b;
            case 2: return c;
            case 3: return d;
            case 4: return e;
            default: return f;
        }
    }

    friend bool operator==(const EdgeSextuple& x, const EdgeSextuple& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d &&
               x.e == y.e && x.f == y.f;
    }
    friend bool operator<(const EdgeSextuple& x, const EdgeSextuple& y) {
        for (int i = 0; i < 6; ++i) {
            if (x.edge(i) != y.edge(i)) return x.edge(i) < y.edge(i);
        }
        return false;
    }

    std::string str() const {
        std::ostringstream os;
        os << "(" << a << "," << b << "," << c << "," << d << "," << e << ","
           << f << ")";
        return os.str();
    }
};

struct invalid_tetrahedron : std::domain_error {
    explicit invalid_tetrahedron(const std::string& what)
        : std::domain_error(what) {}
};

// The three faces carrying two basis edges and one opposite edge.
inline constexpr std::array<std::array<int, 3>, 3> kFaceEdgeIndices = {{
    {0, 2, 1},  // (a, c, b)
    {0, 4, 3},  // (a, e, d)
    {2, 4, 5},  // (c, e, f)
}};

inline constexpr std::array<const char*, 3> kFaceNames = {
    "(a,c,b)", "(a,e,d)", "(c,e,f)"};

// Non-strict triangle inequality on every face; degenerate flat faces pass.
inline bool faces_valid(const EdgeSextuple& s, int* bad_face = nullptr) {
    for (int i = 0; i < 3; ++i) {
        const BigInt& x = s.edge(kFaceEdgeIndices[i][0]);
        const BigInt& y = s.edge(kFaceEdgeIndices[i][1]);
        const BigInt& z = s.edge(kFaceEdgeIndices[i][2]);
        if (x + y < z || x + z < y || y + z < x) {
            if (bad_face) *bad_face = i;
            return false;
        }
    }
    return true;
}

inline void validate_faces(const EdgeSextuple& s) {
    for (int i = 0; i < 6; ++i) {
        if (s.edge(i) <= 0)
            throw invalid_tetrahedron("edge " + std::string(1, "abcdef"[i]) +
                                      " must be positive in " + s.str());
    }
    int bad = -1;
    if (!faces_valid(s, &bad)) {
        throw invalid_tetrahedron("face " + std::string(kFaceNames[bad]) +
                                  " violates the triangle inequality in " +
                                  s.str());
    }
}

// Integer-valued core of the Gram matrix: squared basis lengths on the
// diagonal and doubled dot products off it, so every derived quantity below
// stays in the integers. Instantiated with BigInt for the general path and
// with __int128 in the bounded search loops.
template <class Int>
struct GramCore {
    Int aa, cc, ee;  // a^2, c^2, e^2
    Int uv, uw, vw;  // 2 u.v = a^2+c^2-b^2, 2 u.w, 2 v.w
};

template <class Int>
GramCore<Int> gram_core(const Int& a, const Int& b, const Int& c, const Int& d,
                        const Int& e, const Int& f) {
    GramCore<Int> g;
    g.aa = a * a;
    g.cc = c * c;
    g.ee = e * e;
    g.uv = g.aa + g.cc - b * b;
    g.uw = g.aa + g.ee - d * d;
    g.vw = g.cc + g.ee - f * f;
    return g;
}

inline GramCore<BigInt> gram_core(const EdgeSextuple& s) {
    return gram_core(s.a, s.b, s.c, s.d, s.e, s.f);
}

using Coeffs = std::array<int, 3>;

// |x1 u + x2 v + x3 w|^2; an integer for integer coefficient vectors.
template <class Int>
Int squared_length_core(const GramCore<Int>& g, const Coeffs& x) {
    return Int(x[0]) * x[0] * g.aa + Int(x[1]) * x[1] * g.cc +
           Int(x[2]) * x[2] * g.ee + Int(x[0]) * x[1] * g.uv +
           Int(x[0]) * x[2] * g.uw + Int(x[1]) * x[2] * g.vw;
}

// 2 (x . y) as an integer.
template <class Int>
Int dot2_core(const GramCore<Int>& g, const Coeffs& x, const Coeffs& y) {
    return Int(2) * (Int(x[0]) * y[0] * g.aa + Int(x[1]) * y[1] * g.cc +
                     Int(x[2]) * y[2] * g.ee) +
           Int(x[0] * y[1] + x[1] * y[0]) * g.uv +
           Int(x[0] * y[2] + x[2] * y[0]) * g.uw +
           Int(x[1] * y[2] + x[2] * y[1]) * g.vw;
}

// 4 |x cross y|^2 = 4 |x|^2 |y|^2 - (2 x.y)^2. Parallelogram area^2 is this
// over 4, triangle area^2 this over 16; all three share square status.
template <class Int>
Int area_quad_core(const GramCore<Int>& g, const Coeffs& x, const Coeffs& y) {
    Int d2 = dot2_core(g, x, y);
    return Int(4) * squared_length_core(g, x) * squared_length_core(g, y) -
           d2 * d2;
}

// 8 det(G) = det of the doubled Gram matrix.
template <class Int>
Int det8_core(const GramCore<Int>& g) {
    Int d1 = 2 * g.aa, d2 = 2 * g.cc, d3 = 2 * g.ee;
    return d1 * (d2 * d3 - g.vw * g.vw) - g.uv * (g.uv * d3 - g.vw * g.uw) +
           g.uw * (g.uv * g.vw - d2 * g.uw);
}

// ---------------------------------------------------------------------------
// Exact rational surface.

struct GramMatrix {
    Rational guu, gvv, gww, guv, guw, gvw;
};

inline GramMatrix gram_from_edges(const EdgeSextuple& s) {
    validate_faces(s);
    GramCore<BigInt> c = gram_core(s);
    GramMatrix g;
    g.guu = c.aa;
    g.gvv = c.cc;
    g.gww = c.ee;
    g.guv = Rational(c.uv, 2);
    g.guw = Rational(c.uw, 2);
    g.gvw = Rational(c.vw, 2);
    return g;
}

inline Rational squared_length(const GramMatrix& g, const Coeffs& x) {
    return Rational(x[0] * x[0]) * g.guu + Rational(x[1] * x[1]) * g.gvv +
           Rational(x[2] * x[2]) * g.gww +
           Rational(2 * x[0] * x[1]) * g.guv +
           Rational(2 * x[0] * x[2]) * g.guw +
           Rational(2 * x[1] * x[2]) * g.gvw;
}

inline Rational dot(const GramMatrix& g, const Coeffs& x, const Coeffs& y) {
    return Rational(x[0] * y[0]) * g.guu + Rational(x[1] * y[1]) * g.gvv +
           Rational(x[2] * y[2]) * g.gww +
           Rational(x[0] * y[1] + x[1] * y[0]) * g.guv +
           Rational(x[0] * y[2] + x[2] * y[0]) * g.guw +
           Rational(x[1] * y[2] + x[2] * y[1]) * g.gvw;
}

// Exact squared area of the parallelogram spanned by x and y
// (2x2 Gram determinant); triangle area^2 = result / 4.
inline Rational squared_parallelogram_area(const GramMatrix& g,
                                           const Coeffs& x, const Coeffs& y) {
    Rational d = dot(g, x, y);
    return squared_length(g, x) * squared_length(g, y) - d * d;
}

// det(G) >= 0; value 0 marks a degenerate planar configuration.
inline Rational volume_squared(const GramMatrix& g) {
    Rational det = g.guu * (g.gvv * g.gww - g.gvw * g.gvw) -
                   g.guv * (g.guv * g.gww - g.gvw * g.guw) +
                   g.guw * (g.guv * g.gvw - g.gvv * g.guw);
    if (det < 0)
        throw invalid_tetrahedron(
            "negative Gram determinant: edges admit no tetrahedron");
    return det;
}

// ---------------------------------------------------------------------------
// Vertex labeling of the parallelepiped: coefficients of (u, v, w) per vertex
// v1..v8. Faces are F1234, F5678, F1256, F3478, F1357, F2468; body
// parallelograms B1278, B1368, B1458, B2367, B2457, B3456.

inline constexpr std::array<Coeffs, 8> kPipedVertices = {{
    {0, 0, 0},  // v1
    {1, 0, 0},  // v2
    {0, 1, 0},  // v3
    {1, 1, 0},  // v4
    {0, 0, 1},  // v5
    {1, 0, 1},  // v6
    {0, 1, 1},  // v7
    {1, 1, 1},  // v8
}};

// Body parallelogram spanning pairs, in B1278..B3456 order.
inline constexpr std::array<std::array<Coeffs, 2>, 6> kBodyParallelograms = {{
    {{{1, 0, 0}, {0, 1, 1}}},    // B1278: u x (v+w)
    {{{0, 1, 0}, {1, 0, 1}}},    // B1368: v x (u+w)
    {{{0, 0, 1}, {1, 1, 0}}},    // B1458: w x (u+v)
    {{{-1, 1, 0}, {0, 0, 1}}},   // B2367: (v-u) x w
    {{{0, 1, 0}, {-1, 0, 1}}},   // B2457: v x (w-u)
    {{{1, 0, 0}, {0, -1, 1}}},   // B3456: u x (w-v)
}};

// The four skew-triangle congruence class representatives 146, 147, 167, 467
// as spanning pairs from one vertex of each triangle.
inline constexpr std::array<std::array<Coeffs, 2>, 4> kSkewTriangles = {{
    {{{1, 1, 0}, {1, 0, 1}}},    // T146 from v1
    {{{1, 1, 0}, {0, 1, 1}}},    // T147 from v1
    {{{1, 0, 1}, {0, 1, 1}}},    // T167 from v1
    {{{0, -1, 1}, {-1, 0, 1}}},  // T467 from v4
}};

// ---------------------------------------------------------------------------
// Floating-point embedding: v1 at the origin, u along +x, v in the xy plane,
// w on the +z branch. Distances, not coordinates, are the contract.

struct CoordinateEmbedding {
    using Vec3 = std::array<double, 3>;
    Vec3 origin{};  // v1
    Vec3 u{}, v{}, w{};

    Vec3 piped_vertex(int index_1_to_8) const {
        const Coeffs& c = kPipedVertices[static_cast<size_t>(index_1_to_8 - 1)];
        return {c[0] * u[0] + c[1] * v[0] + c[2] * w[0],
                c[0] * u[1] + c[1] * v[1] + c[2] * w[1],
                c[0] * u[2] + c[1] * v[2] + c[2] * w[2]};
    }
};

namespace detail {
inline double to_double(const Rational& q) {
    return numerator(q).convert_to<double>() /
           denominator(q).convert_to<double>();
}
inline double sq_dist(const CoordinateEmbedding::Vec3& p,
                      const CoordinateEmbedding::Vec3& q) {
    double dx = p[0] - q[0], dy = p[1] - q[1], dz = p[2] - q[2];
    return dx * dx + dy * dy + dz * dz;
}
}  // namespace detail

// Max relative mismatch between the 28 embedded pairwise squared distances
// and their Gram-derived exact values.
inline double embedding_max_error(const CoordinateEmbedding& emb,
                                  const GramMatrix& g) {
    double worst = 0.0;
    for (int i = 1; i <= 8; ++i) {
        for (int j = i + 1; j <= 8; ++j) {
            Coeffs diff;
            for (int k = 0; k < 3; ++k)
                diff[k] = kPipedVertices[static_cast<size_t>(j - 1)][k] -
                          kPipedVertices[static_cast<size_t>(i - 1)][k];
            double exact = detail::to_double(squared_length(g, diff));
            double got = detail::sq_dist(emb.piped_vertex(i), emb.piped_vertex(j));
            double err = std::abs(got - exact) / std::max(1.0, std::abs(exact));
            worst = std::max(worst, err);
        }
    }
    return worst;
}

inline CoordinateEmbedding embed_coordinates(const EdgeSextuple& s) {
    validate_faces(s);
    GramCore<BigInt> core = gram_core(s);
    BigInt det8 = det8_core(core);
    if (det8 < 0)
        throw invalid_tetrahedron(
            "negative Gram determinant: edges admit no tetrahedron");
    const bool planar = (det8 == 0);
    // 4 a^2 c^2 - (2 u.v)^2 == 0 exactly iff u and v are collinear.
    BigInt s1_quad = 4 * core.aa * core.cc - core.uv * core.uv;

    auto dbl = [](const BigInt& n) { return n.convert_to<double>(); };
    double ad = std::sqrt(dbl(core.aa));
    double e2 = dbl(core.ee);

    CoordinateEmbedding emb;
    emb.u = {ad, 0.0, 0.0};

    double r1 = dbl(core.uv) / (2.0 * ad);
    double x = dbl(core.uw) / (2.0 * ad);
    double y, z;
    if (s1_quad != 0) {
        double s1 = std::sqrt(dbl(s1_quad)) / (2.0 * ad);
        emb.v = {r1, s1, 0.0};
        y = (dbl(core.vw) / 2.0 - r1 * x) / s1;
        z = planar ? 0.0 : std::sqrt(std::max(0.0, e2 - x * x - y * y));
    } else {
        // u and v collinear: the whole configuration is planar.
        emb.v = {r1, 0.0, 0.0};
        y = std::sqrt(std::max(0.0, e2 - x * x));
        z = 0.0;
    }
    emb.w = {x, y, z};

    if (embedding_max_error(emb, gram_from_edges(s)) > 1e-9)
        throw std::runtime_error("embedding self-check failed for " + s.str());
    return emb;
}

}  // namespace pipedlab
