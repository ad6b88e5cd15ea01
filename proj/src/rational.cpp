#include "zcocycle/rational.hpp"

#include <stdexcept>

namespace zcy {

Int floor_div(const Int& n, const Int& d) {
    if (d == 0) throw std::invalid_argument("floor_div: zero divisor");
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

Int floor_rational(const Rational& q) {
    return floor_div(q.get_num(), q.get_den());
}

bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

Rational frac(const Rational& q) {
    return q - Rational(floor_rational(q));
}

Rational angle_bracket(const Rational& q) {
    Rational f = frac(q);
    return f == 0 ? Rational(1) : f;
}

Rational bernoulli_bar1(const Rational& q) {
    if (is_integer(q)) return Rational(0);
    return frac(q) - Rational(1, 2);
}

Rational bernoulli_bar2(const Rational& q) {
    Rational f = frac(q);
    return f * f - f + Rational(1, 6);
}

std::string render_rational(const Rational& q) {
    return q.get_str();
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("parse_rational: bad input '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace zcy
