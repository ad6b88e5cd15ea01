#include <doctest.h>

#include <random>

#include "zcocycle/quadratic.hpp"
#include "zcocycle/rational.hpp"

using namespace zcy;

TEST_CASE("frac and angle_bracket") {
    CHECK(frac(Rational(7, 3)) == Rational(1, 3));
    CHECK(frac(Rational(-1, 3)) == Rational(2, 3));
    CHECK(frac(Rational(4)) == 0);
    CHECK(angle_bracket(Rational(0)) == 1);
    CHECK(angle_bracket(Rational(-1, 4)) == Rational(3, 4));
    CHECK(angle_bracket(Rational(5, 2)) == Rational(1, 2));
}

TEST_CASE("periodic Bernoulli values") {
    CHECK(bernoulli_bar1(Rational(0)) == 0);
    CHECK(bernoulli_bar1(Rational(1, 4)) == Rational(-1, 4));
    CHECK(bernoulli_bar1(Rational(-1, 3)) == Rational(1, 6));
    CHECK(bernoulli_bar2(Rational(0)) == Rational(1, 6));
    CHECK(bernoulli_bar2(Rational(1, 2)) == Rational(-1, 12));
    CHECK(bernoulli_bar2(Rational(7, 3)) == Rational(-1, 18));
}

TEST_CASE("Bernoulli periodicity, parity, and Raabe sums") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 12), shift(-4, 4);
    for (int trial = 0; trial < 300; ++trial) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        long n = shift(rng);
        CHECK(bernoulli_bar1(q + n) == bernoulli_bar1(q));
        CHECK(bernoulli_bar2(q + n) == bernoulli_bar2(q));
        CHECK(bernoulli_bar2(-q) == bernoulli_bar2(q));
    }
    // Distribution relations, exhaustive in c.
    for (long c = 1; c <= 30; ++c) {
        for (Rational q : {Rational(0), Rational(1, 3), Rational(-5, 7), Rational(11, 12)}) {
            Rational s1(0), s2(0);
            for (long j = 0; j < c; ++j) {
                s1 += bernoulli_bar1((q + j) / c);
                s2 += bernoulli_bar2((q + j) / c);
            }
            CHECK(s1 == bernoulli_bar1(q));
            CHECK(s2 == bernoulli_bar2(q) / c);
        }
    }
}

TEST_CASE("rational text format round-trips") {
    for (const char* s : {"0", "-9/20", "7/3", "12"}) {
        CHECK(render_rational(parse_rational(s)) == s);
    }
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK_THROWS(parse_rational(""));
    CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("QuadraticReal normalization") {
    // sqrt(12) = 2 sqrt(3)
    QuadraticReal v(Rational(0), Rational(1), 12);
    CHECK(v.disc() == 3);
    CHECK(v.irr() == 2);
    // sqrt(9) collapses to the rational 3
    QuadraticReal w(Rational(1), Rational(1), 9);
    CHECK(w.is_rational());
    CHECK(w.rat() == 4);
}

TEST_CASE("quad_sign") {
    CHECK(quad_sign(QuadraticReal(Rational(26), Rational(-15), 3)) == 1);
    CHECK(quad_sign(QuadraticReal(Rational(0), Rational(0), 2)) == 0);
    CHECK(quad_sign(QuadraticReal(Rational(1), Rational(-1), 2)) == -1);
    CHECK(quad_sign(quad_sqrt(5)) == 1);
    CHECK(quad_sign(-quad_sqrt(5)) == -1);
}

TEST_CASE("QuadraticReal field arithmetic") {
    QuadraticReal r2 = quad_sqrt(2);
    CHECK(r2 * r2 == QuadraticReal(Rational(2)));
    CHECK(r2.inverse() * r2 == QuadraticReal(Rational(1)));
    CHECK(r2.inverse() == QuadraticReal(Rational(0), Rational(1, 2), 2));
    QuadraticReal unit(Rational(26), Rational(-15), 3);
    CHECK(unit * unit.conjugate() == QuadraticReal(Rational(1)));  // norm-1 unit
    CHECK_THROWS(quad_sqrt(2) + quad_sqrt(3));
    // sign of reciprocal matches
    for (const QuadraticReal& t : {r2, -r2, unit, -unit}) {
        CHECK(quad_sign(t) * quad_sign(t.inverse()) == 1);
    }
}

TEST_CASE("quadratic text format round-trips") {
    for (const char* s :
         {"sqrt(3)", "-sqrt(2)", "26-15*sqrt(3)", "1/2+1/2*sqrt(5)", "-9/20", "0"}) {
        CHECK(render_quadratic(parse_quadratic(s)) == s);
    }
    CHECK(parse_quadratic("26-15*sqrt(3)") == QuadraticReal(Rational(26), Rational(-15), 3));
    CHECK(parse_quadratic("sqrt(12)") == QuadraticReal(Rational(0), Rational(2), 3));
    CHECK_THROWS(parse_quadratic("sqrt(-3)"));
    CHECK_THROWS(parse_quadratic("sqrt(2)+sqrt(3)"));
}
