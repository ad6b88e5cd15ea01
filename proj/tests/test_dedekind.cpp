#include <doctest.h>

#include <random>

#include "zcocycle/dedekind.hpp"

using namespace zcy;

TEST_CASE("Dedekind-Rademacher sum values") {
    CHECK(dedekind_rademacher(0, 1, {Rational(1, 4), Rational(1, 4)}) == Rational(1, 16));
    CHECK(dedekind_rademacher(1, 3, {Rational(0), Rational(0)}) == Rational(1, 18));
    CHECK(dedekind_rademacher(-26, -15, {Rational(1, 5), Rational(0)}) == Rational(29, 180));
    CHECK(dedekind_rademacher(-1, 2, {Rational(1, 2), Rational(0)}) == 0);
    CHECK_THROWS(dedekind_rademacher(1, 0, {Rational(0), Rational(0)}));
}

TEST_CASE("Z^2-periodicity and shift invariance") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 12), cdist(1, 12), shift(-3, 3);
    for (int trial = 0; trial < 200; ++trial) {
        Rational x1(num(rng), den(rng)), x2(num(rng), den(rng));
        x1.canonicalize();
        x2.canonicalize();
        long c = cdist(rng);
        if (rng() % 2) c = -c;
        long a = num(rng);
        RationalPoint x{x1, x2};
        RationalPoint xs{x1 + shift(rng), x2 + shift(rng)};
        Rational base = dedekind_rademacher(a, c, x);
        CHECK(dedekind_rademacher(a, c, xs) == base);
        // a -> a+c shifts the first slot by x2+m, an integer exactly when
        // x2 is; the invariance needs that integrality.
        RationalPoint xi{x1, Rational(shift(rng))};
        CHECK(dedekind_rademacher(a + c, c, xi) == dedekind_rademacher(a, c, xi));
    }
}

TEST_CASE("representative independence of the summation range") {
    // Shift the residue system {0..|c|-1} by an arbitrary offset through x2.
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 8), cdist(2, 10);
    for (int trial = 0; trial < 100; ++trial) {
        long c = cdist(rng), a = num(rng), offset = num(rng);
        Rational x1(num(rng), den(rng));
        x1.canonicalize();
        RationalPoint x{x1, Rational(0)};
        // Summing over {offset, ..., offset+c-1} equals shifting x2 by offset.
        Rational shifted(0);
        Rational a_over_c(a, c), inv_c(1, c);
        a_over_c.canonicalize();
        inv_c.canonicalize();
        for (long m = offset; m < offset + c; ++m) {
            shifted += bernoulli_bar1(x.x1 + m * a_over_c) * bernoulli_bar1(m * inv_c);
        }
        CHECK(shifted == dedekind_rademacher(a, c, x));
    }
}
