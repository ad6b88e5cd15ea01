#include "zcocycle/ehrhart.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace zcy {

namespace {

Int gcd(const Int& x, const Int& y) {
    Int g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return g;
}

Int lcm(const Int& x, const Int& y) {
    Int l;
    mpz_lcm(l.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return l;
}

Int ceil_rational(const Rational& q) {
    return -floor_rational(-q);
}

Rational cross(const RationalPoint& u, const RationalPoint& v) {
    return u.x1 * v.x2 - u.x2 * v.x1;
}

RationalPoint sub(const RationalPoint& u, const RationalPoint& v) {
    return {u.x1 - v.x1, u.x2 - v.x2};
}

std::size_t residue_index(const Int& m, const Int& period) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), m.get_mpz_t(), period.get_mpz_t());
    return r.get_ui();
}

}  // namespace

Rational LatticeTriangle::signed_area2() const {
    return cross(sub(v1, v0), sub(v2, v0));
}

Rational LatticeTriangle::area() const {
    Rational s = signed_area2();
    if (s < 0) s = -s;
    return s / 2;
}

Rational QuasiPolynomial::evaluate(const Int& m) const {
    const auto& c = coeffs[residue_index(m, period)];
    Rational mq{m};
    return c[2] * mq * mq + c[1] * mq + c[0];
}

LatticeTriangle triangle_T(const IntMatrix2& gamma) {
    if (gamma.c == 0) throw std::invalid_argument("triangle_T: c must be nonzero");
    return {{Rational(0), Rational(0)},
            {Rational(gamma.a - 1), Rational(gamma.c)},
            {Rational(-1), Rational(0)}};
}

LatticeTriangle dilate(const LatticeTriangle& t, const Rational& q) {
    if (q <= 0) throw std::invalid_argument("dilate: factor must be positive");
    return {{t.v0.x1 * q, t.v0.x2 * q}, {t.v1.x1 * q, t.v1.x2 * q}, {t.v2.x1 * q, t.v2.x2 * q}};
}

LatticeCount count_lattice(const LatticeTriangle& t) {
    if (t.signed_area2() == 0)
        throw std::invalid_argument("count_lattice: degenerate triangle");

    const RationalPoint* v[3] = {&t.v0, &t.v1, &t.v2};
    Rational min_y = t.v0.x2, max_y = t.v0.x2;
    for (int i = 1; i < 3; ++i) {
        if (v[i]->x2 < min_y) min_y = v[i]->x2;
        if (v[i]->x2 > max_y) max_y = v[i]->x2;
    }

    // Row scan: by convexity the boundary points of a non-degenerate row are
    // exactly the endpoints of its x-interval, unless the row carries a
    // horizontal edge, in which case the whole interval is boundary.
    Int interior = 0, boundary = 0;
    for (Int py = ceil_rational(min_y); py <= floor_rational(max_y); ++py) {
        Rational y{py};
        bool have = false, horizontal = false;
        Rational xl, xr;
        auto take = [&](const Rational& x) {
            if (!have) {
                xl = xr = x;
                have = true;
            } else {
                if (x < xl) xl = x;
                if (x > xr) xr = x;
            }
        };
        for (int i = 0; i < 3; ++i) {
            const RationalPoint& a = *v[i];
            const RationalPoint& b = *v[(i + 1) % 3];
            if (a.x2 == b.x2) {
                if (a.x2 == y) {
                    horizontal = true;
                    take(a.x1);
                    take(b.x1);
                }
                continue;
            }
            const RationalPoint& lo = a.x2 < b.x2 ? a : b;
            const RationalPoint& hi = a.x2 < b.x2 ? b : a;
            if (y < lo.x2 || y > hi.x2) continue;
            take(lo.x1 + (y - lo.x2) * (hi.x1 - lo.x1) / (hi.x2 - lo.x2));
        }
        if (!have) continue;
        Int lo = ceil_rational(xl), hi = floor_rational(xr);
        if (lo > hi) continue;
        Int n = hi - lo + 1;
        if (horizontal) {
            boundary += n;
        } else {
            Int b = 0;
            if (Rational(lo) == xl) ++b;
            if (Rational(hi) == xr && xr != xl) ++b;
            boundary += b;
            interior += n - b;
        }
    }
    return {interior, boundary};
}

Rational weighted_count(const LatticeTriangle& t) {
    LatticeCount n = count_lattice(t);
    return Rational(n.interior) + Rational(n.boundary) / 2;
}

Int lattice_point_count(const LatticeTriangle& t, const Int& m) {
    if (m < 0) throw std::invalid_argument("lattice_point_count: m must be nonnegative");
    if (m == 0) return 1;
    LatticeCount n = count_lattice(dilate(t, Rational(m)));
    return n.interior + n.boundary;
}

namespace {

// Shared hypothesis check for the dilated-triangle counting lemmas.
// Returns (content, c*{x1}, {x1}).
struct CountingSetup {
    Int ell;
    Int n;  // c * {x1}
    Rational fx1;
};

CountingSetup counting_setup(const IntMatrix2& gamma, const Rational& x1) {
    if (!gamma.is_sl2())
        throw std::invalid_argument("counting lemma: matrix not in SL2(Z)");
    if (gamma.c <= 0) throw std::invalid_argument("counting lemma: c must be positive");
    Int am1 = gamma.a - 1;
    Int ell = gcd(gamma.c, am1);
    if (ell <= 1) throw std::invalid_argument("counting lemma: content must exceed 1");
    if (is_integer(x1) || !is_integer(x1 * Rational(ell)))
        throw std::invalid_argument("counting lemma: x1 must lie in content^{-1} Z \\ Z");
    Rational fx1 = frac(x1);
    Rational n_q = Rational(gamma.c) * fx1;
    return {ell, n_q.get_num(), fx1};
}

}  // namespace

Int interior_floor_sum(const IntMatrix2& gamma, const Rational& x1) {
    CountingSetup s = counting_setup(gamma, x1);
    Int sum = 0;
    for (Int m = 1; m < s.n; ++m) {
        sum += floor_div(m * gamma.d, gamma.c) - floor_div(m * (gamma.d - 1), gamma.c);
    }
    return sum;
}

Rational interior_closed_form(const IntMatrix2& gamma, const Rational& x1) {
    CountingSetup s = counting_setup(gamma, x1);
    Rational result = s.fx1 / 2 * Rational(s.n + 1 + gamma.c - s.ell);
    Rational d_over_c(gamma.d, gamma.c);
    d_over_c.canonicalize();
    for (Int m = 1; m <= s.n; ++m) result -= frac(Rational(m) * d_over_c);
    return result;
}

EdgeCounts edge_counts(const IntMatrix2& gamma, const Rational& x1) {
    CountingSetup s = counting_setup(gamma, x1);
    Rational main = 1 + Rational(s.ell) * s.fx1;
    return {main.get_num(), 0};
}

namespace {

Int denominator_lcm(const LatticeTriangle& t) {
    Int d = 1;
    for (const RationalPoint* p : {&t.v0, &t.v1, &t.v2}) {
        d = lcm(d, p->x1.get_den());
        d = lcm(d, p->x2.get_den());
    }
    return d;
}

// Quadratic through (m0,y0), (m1,y1), (m2,y2) with distinct nodes, by
// Cramer's rule on the Vandermonde system.
std::array<Rational, 3> solve_quadratic(const Rational& m0, const Rational& y0,
                                        const Rational& m1, const Rational& y1,
                                        const Rational& m2, const Rational& y2) {
    Rational det = (m1 - m0) * (m2 - m0) * (m2 - m1);
    Rational c2 = ((y2 - y1) * (m1 - m0) - (y1 - y0) * (m2 - m1)) / det;
    Rational c1 = (y1 - y0) / (m1 - m0) - c2 * (m0 + m1);
    Rational c0 = y0 - c1 * m0 - c2 * m0 * m0;
    return {c0, c1, c2};
}

}  // namespace

QuasiPolynomial ehrhart_fit(const LatticeTriangle& t) {
    if (t.signed_area2() == 0) throw std::invalid_argument("ehrhart_fit: degenerate triangle");
    Int period = denominator_lcm(t);
    QuasiPolynomial q;
    q.period = period;
    for (Int r = 0; r < period; ++r) {
        Int m0 = r, m1 = r + period, m2 = r + 2 * period;
        Rational y0{lattice_point_count(t, m0)};
        Rational y1{lattice_point_count(t, m1)};
        Rational y2{lattice_point_count(t, m2)};
        q.coeffs.push_back(
            solve_quadratic(Rational(m0), y0, Rational(m1), y1, Rational(m2), y2));
    }
    // Over-verify well past the sampled range.
    for (Int m = 0; m <= 6 * period; ++m) {
        if (q.evaluate(m) != Rational(lattice_point_count(t, m)))
            throw std::logic_error("ehrhart_fit: fitted quasi-polynomial disagrees with counts");
    }
    return q;
}

Rational g_coefficient(const QuasiPolynomial& q, int i, const Int& m) {
    if (i < 0 || i > 2) throw std::invalid_argument("g_coefficient: i must be 0, 1, or 2");
    return q.coeffs[residue_index(m, q.period)][static_cast<std::size_t>(i)];
}

FaceIndices face_indices(const LatticeTriangle& t) {
    if (t.signed_area2() == 0) throw std::invalid_argument("face_indices: degenerate triangle");
    FaceIndices f{denominator_lcm(t), 1, 1};
    const RationalPoint* v[3] = {&t.v0, &t.v1, &t.v2};
    for (int i = 0; i < 3; ++i) {
        const RationalPoint& a = *v[i];
        const RationalPoint& b = *v[(i + 1) % 3];
        // Primitive integer normal (p,q) of the edge line; d * line meets
        // Z^2 iff d * offset is an integer, so the edge index is den(offset).
        RationalPoint dir = sub(b, a);
        Int scale = lcm(dir.x1.get_den(), dir.x2.get_den());
        Int nx = Rational(dir.x2 * Rational(scale)).get_num();
        Int ny = Rational(-dir.x1 * Rational(scale)).get_num();
        Int g = gcd(nx, ny);
        nx /= g;
        ny /= g;
        Rational offset = Rational(nx) * a.x1 + Rational(ny) * a.x2;
        f.d1 = lcm(f.d1, offset.get_den());
    }
    return f;
}

Rational theorem3_residual(const IntMatrix2& gamma, const IntMatrix2& gamma_prime, const Int& m) {
    if (!gamma.is_sl2() || !gamma_prime.is_sl2())
        throw std::invalid_argument("theorem3_residual: matrices must be in SL2(Z)");
    if (m < 0) throw std::invalid_argument("theorem3_residual: m must be nonnegative");
    Int mixed = gamma.c * gamma_prime.a + gamma.d * gamma_prime.c;
    if (gamma.c <= 0 || gamma_prime.c <= 0 || mixed <= 0)
        throw std::invalid_argument("theorem3_residual: c, c', and ca'+dc' must be positive");

    Int ell = gcd(content(gamma), content(gamma_prime));
    Rational inv_ell(1, ell);
    inv_ell.canonicalize();

    // Fits are pure, so sweeps over many m reuse them through a small cache.
    static std::mutex cache_mutex;
    static std::map<std::string, QuasiPolynomial> cache;
    auto g0 = [&](const IntMatrix2& g) {
        std::string key = g.a.get_str() + "," + g.b.get_str() + "," + g.c.get_str() + "," +
                          g.d.get_str() + "|" + ell.get_str();
        {
            std::lock_guard<std::mutex> lock(cache_mutex);
            auto it = cache.find(key);
            if (it != cache.end()) return g_coefficient(it->second, 0, m);
        }
        QuasiPolynomial q = ehrhart_fit(dilate(triangle_T(g), inv_ell));
        std::lock_guard<std::mutex> lock(cache_mutex);
        return g_coefficient(cache.emplace(key, std::move(q)).first->second, 0, m);
    };

    Rational m_over_ell(m, ell);
    m_over_ell.canonicalize();
    return g0(gamma * gamma_prime) - g0(gamma) - g0(gamma_prime) - frac(m_over_ell) + 1;
}

}  // namespace zcy
