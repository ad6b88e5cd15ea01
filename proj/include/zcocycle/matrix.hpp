#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zcocycle/rational.hpp"

namespace zcy {

// 2x2 integer matrix [[a,b],[c,d]] with nonzero determinant.
struct IntMatrix2 {
    Int a, b, c, d;

    Int det() const { return a * d - b * c; }
    bool is_sl2() const { return det() == 1; }

    friend IntMatrix2 operator*(const IntMatrix2& u, const IntMatrix2& v) {
        return {u.a * v.a + u.b * v.c, u.a * v.b + u.b * v.d,
                u.c * v.a + u.d * v.c, u.c * v.b + u.d * v.d};
    }
    friend bool operator==(const IntMatrix2& u, const IntMatrix2& v) {
        return u.a == v.a && u.b == v.b && u.c == v.c && u.d == v.d;
    }

    static IntMatrix2 identity() { return {1, 0, 0, 1}; }
};

// Row vector x = (x1, x2) in Q^2.
struct RationalPoint {
    Rational x1, x2;

    friend bool operator==(const RationalPoint& u, const RationalPoint& v) {
        return u.x1 == v.x1 && u.x2 == v.x2;
    }
};

// Componentwise fractional part: the canonical representative mod Z^2.
RationalPoint reduce_mod_z2(const RationalPoint& x);

// x gamma^{-T} for a row vector x.
RationalPoint apply_inverse_transpose(const IntMatrix2& gamma, const RationalPoint& x);

// gcd(c, a-1) for gamma in SL2(Z); equals gcd(c, d-1).
Int content(const IntMatrix2& gamma);

// A complete set of |det gamma| coset representatives for Z^2 modulo the
// row lattice Z^2 gamma^T, computed from a Hermite-normal-form basis.
// Deterministic: the representatives form a box {0..g-1} x {0..t-1}.
std::vector<RationalPoint> coset_reps(const IntMatrix2& gamma);

// True iff mu and nu are congruent modulo Z^2 gamma^T.
bool coset_equivalent(const IntMatrix2& gamma, const RationalPoint& mu, const RationalPoint& nu);

// Order of the character chi_j(mu) = e(<mu, row j of gamma^{-1}>) in the
// character group of Z^2 / Z^2 gamma^T: |det|/gcd(b,d) for j=1 and
// |det|/gcd(a,c) for j=2.
Int character_order(const IntMatrix2& gamma, int j);

// Deterministic pseudo-random SL2(Z) element: a product of at most
// max_word_len generators S, T and their inverses.
IntMatrix2 random_sl2(std::uint64_t seed, int max_word_len);

// Text formats: matrix "a,b,c,d"; point "p/q,r/s".
std::string render_matrix(const IntMatrix2& m);
IntMatrix2 parse_matrix(const std::string& s);
std::string render_point(const RationalPoint& x);
RationalPoint parse_point(const std::string& s);

}  // namespace zcy
