#pragma once

#include <array>
#include <vector>

#include "zcocycle/matrix.hpp"
#include "zcocycle/rational.hpp"

namespace zcy {

// Non-degenerate triangle in the plane with rational vertices.
struct LatticeTriangle {
    RationalPoint v0, v1, v2;

    // Twice the signed area (cross product of edge vectors).
    Rational signed_area2() const;
    Rational area() const;
};

struct LatticeCount {
    Int interior;
    Int boundary;
};

// Degree-2 quasi-polynomial: evaluate(m) uses the coefficient triple of the
// residue class m mod period.
struct QuasiPolynomial {
    Int period;
    // coeffs[r] = (c0, c1, c2) for residue r.
    std::vector<std::array<Rational, 3>> coeffs;

    Rational evaluate(const Int& m) const;
};

// Triangle with vertices (0,0), (a-1,c), (-1,0); requires c != 0.
LatticeTriangle triangle_T(const IntMatrix2& gamma);

// Scale every vertex by q > 0.
LatticeTriangle dilate(const LatticeTriangle& t, const Rational& q);

// Exact brute-force count of lattice points strictly inside / on the
// boundary, by rational sidedness tests over the integer bounding box.
LatticeCount count_lattice(const LatticeTriangle& t);

// interior + boundary/2.
Rational weighted_count(const LatticeTriangle& t);

// #(Z^2 cap mP) with the convention that 0P is the single point {0}.
Int lattice_point_count(const LatticeTriangle& t, const Int& m);

// Interior count of the dilated triangle {x1} T_gamma as a floor sum
//   sum_{m=1}^{c{x1}-1} floor(m d/c) - floor(m (d-1)/c).
// Requires gamma in SL2(Z), c > 0, content > 1, x1 in content^{-1} Z \ Z.
Int interior_floor_sum(const IntMatrix2& gamma, const Rational& x1);

// Same count in closed form:
//   ({x1}/2)(c{x1} + 1 + c - content) - sum_{m=1}^{c{x1}} {m d/c}.
Rational interior_closed_form(const IntMatrix2& gamma, const Rational& x1);

// Boundary points of {x1} T_gamma split by edge: 1 + content*{x1} on the
// closed edge from the origin to {x1}(a-1, c), zero on the other two.
struct EdgeCounts {
    Int main_edge;
    Int other_edges;
};
EdgeCounts edge_counts(const IntMatrix2& gamma, const Rational& x1);

// Exact quasi-polynomial fit: period = den(P), three samples per residue
// solved by Cramer's rule, then over-verified against brute-force counts
// for all m <= 6*period.
QuasiPolynomial ehrhart_fit(const LatticeTriangle& t);

Rational g_coefficient(const QuasiPolynomial& q, int i, const Int& m);

// (d0, d1, d2): smallest d such that every scaled i-face's affine hull
// meets Z^2.
struct FaceIndices {
    Int d0, d1, d2;
};
FaceIndices face_indices(const LatticeTriangle& t);

// G0(l^{-1} T_{gg'}, m) - G0(l^{-1} T_g, m) - G0(l^{-1} T_{g'}, m)
//   - {m/l} + 1,  l = gcd(content(g), content(g')); exactly zero.
Rational theorem3_residual(const IntMatrix2& gamma, const IntMatrix2& gamma_prime, const Int& m);

}  // namespace zcy
