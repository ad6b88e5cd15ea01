#pragma once

#include <gmpxx.h>

#include <string>

namespace zcy {

using Int = mpz_class;
using Rational = mpq_class;

// Euclidean floor of n/d (d != 0), rounding toward -infinity.
Int floor_div(const Int& n, const Int& d);

// Largest integer <= q.
Int floor_rational(const Rational& q);

bool is_integer(const Rational& q);

// Fractional part {q} = q - floor(q), always in [0,1).
Rational frac(const Rational& q);

// The unique representative of q mod Z in the half-open interval (0,1].
Rational angle_bracket(const Rational& q);

// Periodic Bernoulli functions. bernoulli_bar1 vanishes at integers;
// elsewhere it is {q} - 1/2. bernoulli_bar2 is {q}^2 - {q} + 1/6.
Rational bernoulli_bar1(const Rational& q);
Rational bernoulli_bar2(const Rational& q);

// Text format: "p/q" or "p". parse_rational(render_rational(v)) == v.
std::string render_rational(const Rational& q);
Rational parse_rational(const std::string& s);

}  // namespace zcy
