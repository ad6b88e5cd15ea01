#include <doctest.h>

#include "zcocycle/ehrhart.hpp"
#include "zcocycle/verify.hpp"

using namespace zcy;

namespace {

RationalPoint pt(long x, long y) { return {Rational(x), Rational(y)}; }
RationalPoint pt(const Rational& x, const Rational& y) { return {x, y}; }

}  // namespace

TEST_CASE("triangle construction and area") {
    LatticeTriangle t = triangle_T({1, 0, 2, 1});
    CHECK(t.v0 == pt(0, 0));
    CHECK(t.v1 == pt(0, 2));
    CHECK(t.v2 == pt(-1, 0));
    CHECK(t.area() == 1);
    CHECK(triangle_T({2, 1, 3, 2}).v1 == pt(1, 3));
    CHECK(triangle_T({2, 1, 3, 2}).area() == Rational(3, 2));
    CHECK_THROWS(triangle_T({1, 0, 0, 1}));

    LatticeTriangle half = dilate(t, Rational(1, 2));
    CHECK(half.v1 == pt(Rational(0), Rational(1)));
    CHECK(half.area() == t.area() / 4);
    CHECK_THROWS(dilate(t, Rational(0)));
}

TEST_CASE("brute-force lattice counting") {
    LatticeTriangle small{pt(0, 0), pt(Rational(0), Rational(1)), pt(Rational(-1, 2), Rational(0))};
    LatticeCount n = count_lattice(small);
    CHECK(n.interior == 0);
    CHECK(n.boundary == 2);
    CHECK(weighted_count(small) == 1);

    LatticeCount big = count_lattice(triangle_T({1, 0, 2, 1}));
    CHECK(big.interior == 0);
    CHECK(big.boundary == 4);

    LatticeTriangle unit{pt(0, 0), pt(1, 0), pt(0, 1)};
    LatticeCount u = count_lattice(unit);
    CHECK(u.interior == 0);
    CHECK(u.boundary == 3);
    CHECK(weighted_count(unit) == Rational(3, 2));
    // Pick: area = interior + boundary/2 - 1
    CHECK(unit.area() == Rational(u.interior) + Rational(u.boundary) / 2 - 1);
}

TEST_CASE("interior counting lemmas against brute force") {
    CHECK(interior_floor_sum({1, 0, 2, 1}, Rational(1, 2)) == 0);
    CHECK(interior_floor_sum({1, 0, 4, 1}, Rational(1, 2)) == 0);
    CHECK(interior_closed_form({1, 0, 2, 1}, Rational(1, 2)) == 0);
    CHECK_THROWS(interior_floor_sum({2, 1, 1, 1}, Rational(1, 2)));  // content 1
    CHECK_THROWS(interior_floor_sum({1, 0, 2, 1}, Rational(1, 3)));  // wrong denominator

    for (const IntMatrix2& g : sl2_sweep(20, true)) {
        Int ell = content(g);
        for (Int m = 1; m < ell; ++m) {
            Rational x1(m, ell);
            x1.canonicalize();
            LatticeCount brute = count_lattice(dilate(triangle_T(g), x1));
            CHECK(Rational(interior_floor_sum(g, x1)) == Rational(brute.interior));
            CHECK(interior_closed_form(g, x1) == Rational(brute.interior));
            EdgeCounts ec = edge_counts(g, x1);
            CHECK(ec.other_edges == 0);
            CHECK(ec.main_edge + ec.other_edges == brute.boundary);
        }
    }
}

TEST_CASE("edge count examples") {
    EdgeCounts e1 = edge_counts({1, 0, 2, 1}, Rational(1, 2));
    CHECK(e1.main_edge == 2);
    EdgeCounts e2 = edge_counts({1, 0, 4, 1}, Rational(1, 2));
    CHECK(e2.main_edge == 3);
    // integral triangle boundary: content + 2
    for (const IntMatrix2& g : sl2_sweep(8, true)) {
        CHECK(count_lattice(triangle_T(g)).boundary == content(g) + 2);
    }
}

TEST_CASE("quasi-polynomial fit") {
    // half of T for gamma = [[1,0],[2,1]]
    QuasiPolynomial q = ehrhart_fit(
        {pt(0, 0), pt(Rational(0), Rational(1)), pt(Rational(-1, 2), Rational(0))});
    CHECK(q.period == 2);
    CHECK(q.coeffs[0] == std::array<Rational, 3>{Rational(1), Rational(1), Rational(1, 4)});
    CHECK(q.coeffs[1] == std::array<Rational, 3>{Rational(3, 4), Rational(1), Rational(1, 4)});
    Int expected_counts[6] = {1, 2, 4, 6, 9, 12};
    LatticeTriangle half{pt(0, 0), pt(Rational(0), Rational(1)), pt(Rational(-1, 2), Rational(0))};
    for (long m = 0; m < 6; ++m) CHECK(lattice_point_count(half, m) == expected_counts[m]);

    // integral triangle: a plain Pick polynomial
    QuasiPolynomial p = ehrhart_fit(triangle_T({1, 0, 2, 1}));
    CHECK(p.period == 1);
    CHECK(p.coeffs[0] == std::array<Rational, 3>{Rational(1), Rational(2), Rational(1)});

    QuasiPolynomial r = ehrhart_fit(
        {pt(0, 0), pt(Rational(0), Rational(2)), pt(Rational(-1, 2), Rational(0))});
    CHECK(r.period == 2);
    CHECK(r.coeffs[0] == std::array<Rational, 3>{Rational(1), Rational(3, 2), Rational(1, 2)});
    CHECK(r.coeffs[1] == r.coeffs[0]);
}

TEST_CASE("g_coefficient and the fixed leading profile") {
    IntMatrix2 g{1, 0, 2, 1};
    QuasiPolynomial q = ehrhart_fit(dilate(triangle_T(g), Rational(1, 2)));
    CHECK(g_coefficient(q, 0, 1) == Rational(3, 4));
    CHECK(g_coefficient(q, 0, 2) == 1);
    CHECK(g_coefficient(q, 2, 0) == Rational(1, 4));  // c/(2 l^2)
    CHECK(g_coefficient(q, 1, 5) == 1);               // (l+2)/(2l)
}

TEST_CASE("homogeneity of fitted coefficients") {
    for (const LatticeTriangle& t :
         {LatticeTriangle{pt(0, 0), pt(Rational(0), Rational(1)), pt(Rational(-1, 2), Rational(0))},
          triangle_T({2, 1, 3, 2}),
          LatticeTriangle{pt(0, 0), pt(Rational(1, 3), Rational(2)), pt(-1, 0)}}) {
        QuasiPolynomial base = ehrhart_fit(t);
        for (long m : {2, 3}) {
            QuasiPolynomial scaled = ehrhart_fit(dilate(t, Rational(m)));
            for (Int tt = 0; tt <= 2 * base.period; ++tt) {
                for (int i = 0; i <= 2; ++i) {
                    Rational lhs = g_coefficient(scaled, i, tt);
                    Rational pw = i == 0 ? Rational(1) : (i == 1 ? Rational(m) : Rational(m * m));
                    CHECK(lhs == pw * g_coefficient(base, i, Int(m) * tt));
                }
            }
        }
    }
}

TEST_CASE("face indices") {
    CHECK(face_indices(dilate(triangle_T({1, 0, 2, 1}), Rational(1, 2))).d0 == 2);
    FaceIndices f = face_indices(dilate(triangle_T({1, 0, 2, 1}), Rational(1, 2)));
    CHECK(f.d1 == 1);
    CHECK(f.d2 == 1);
    FaceIndices g = face_indices(triangle_T({2, 1, 3, 2}));
    CHECK(g.d0 == 1);
    CHECK(g.d1 == 1);
    FaceIndices h = face_indices({pt(Rational(-1, 3), Rational(0)), pt(1, 0), pt(0, 1)});
    CHECK(h.d0 == 3);
}

TEST_CASE("content-quotient additivity of the constant coefficient") {
    IntMatrix2 g{1, 0, 2, 1};
    CHECK(theorem3_residual(g, g, 0) == 0);
    CHECK(theorem3_residual(g, g, 1) == 0);
    CHECK(theorem3_residual(g, g, 5) == 0);
    // worked instance: 1 = 3/4 + 3/4 + 1/2 - 1 at odd m
    QuasiPolynomial qq = ehrhart_fit(dilate(triangle_T(g * g), Rational(1, 2)));
    CHECK(g_coefficient(qq, 0, 1) == 1);
    CHECK_THROWS(theorem3_residual({1, 0, -2, 1}, g, 1));
}
