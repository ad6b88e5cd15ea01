#include "zcocycle/quadratic.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace zcy {

namespace {

// d = k^2 * core with core square-free; returns (core, k). d > 0.
std::pair<Int, Int> squarefree_core(const Int& d) {
    Int core = 1, k = 1, rest = d;
    for (Int p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) k *= p;
        if (e % 2 == 1) core *= p;
    }
    core *= rest;
    return {core, k};
}

int sign_of(const Rational& q) {
    return mpq_sgn(q.get_mpq_t());
}

}  // namespace

QuadraticReal::QuadraticReal(Rational rat, Rational irr, Int disc)
    : rat_(std::move(rat)), irr_(std::move(irr)), disc_(std::move(disc)) {
    if (irr_ == 0) {
        disc_ = 0;
        return;
    }
    if (disc_ <= 0) throw std::invalid_argument("QuadraticReal: disc must be positive");
    auto [core, k] = squarefree_core(disc_);
    if (core == 1) {
        // Perfect square: the value is rational.
        rat_ += irr_ * Rational(k);
        irr_ = 0;
        disc_ = 0;
        return;
    }
    irr_ *= Rational(k);
    disc_ = core;
}

int QuadraticReal::sign() const {
    int sr = sign_of(rat_);
    int si = sign_of(irr_);
    if (si == 0) return sr;
    if (sr == 0) return si;
    if (sr == si) return sr;
    // Opposite signs: compare rat^2 with irr^2 * disc.
    Rational lhs = rat_ * rat_;
    Rational rhs = irr_ * irr_ * Rational(disc_);
    int cmp = mpq_cmp(lhs.get_mpq_t(), rhs.get_mpq_t());
    // disc square-free > 1, so lhs == rhs cannot happen for nonzero parts.
    return cmp > 0 ? sr : si;
}

QuadraticReal QuadraticReal::operator-() const {
    QuadraticReal r;
    r.rat_ = -rat_;
    r.irr_ = -irr_;
    r.disc_ = disc_;
    return r;
}

QuadraticReal QuadraticReal::conjugate() const {
    QuadraticReal r;
    r.rat_ = rat_;
    r.irr_ = -irr_;
    r.disc_ = disc_;
    return r;
}

QuadraticReal QuadraticReal::inverse() const {
    if (is_rational()) {
        if (rat_ == 0) throw std::domain_error("QuadraticReal: inverse of zero");
        return QuadraticReal(1 / rat_);
    }
    // 1/(p + q sqrt(D)) = (p - q sqrt(D)) / (p^2 - q^2 D); the norm is
    // nonzero since the value is irrational.
    Rational norm = rat_ * rat_ - irr_ * irr_ * Rational(disc_);
    QuadraticReal r;
    r.rat_ = rat_ / norm;
    r.irr_ = -irr_ / norm;
    r.disc_ = disc_;
    return r;
}

namespace {

// Common field for a binary operation; throws on a genuine mismatch.
Int merged_disc(const QuadraticReal& u, const QuadraticReal& v) {
    if (u.is_rational()) return v.disc();
    if (v.is_rational()) return u.disc();
    if (u.disc() != v.disc())
        throw std::invalid_argument("QuadraticReal: mixed discriminants");
    return u.disc();
}

QuadraticReal make_raw(Rational rat, Rational irr, Int disc) {
    if (irr == 0) return QuadraticReal(std::move(rat));
    // disc already square-free here; skip renormalization.
    return QuadraticReal(std::move(rat), std::move(irr), std::move(disc));
}

}  // namespace

QuadraticReal operator+(const QuadraticReal& u, const QuadraticReal& v) {
    Int d = merged_disc(u, v);
    return make_raw(u.rat_ + v.rat_, u.irr_ + v.irr_, d);
}

QuadraticReal operator-(const QuadraticReal& u, const QuadraticReal& v) {
    Int d = merged_disc(u, v);
    return make_raw(u.rat_ - v.rat_, u.irr_ - v.irr_, d);
}

QuadraticReal operator*(const QuadraticReal& u, const QuadraticReal& v) {
    Int d = merged_disc(u, v);
    Rational rat = u.rat_ * v.rat_ + u.irr_ * v.irr_ * Rational(d);
    Rational irr = u.rat_ * v.irr_ + u.irr_ * v.rat_;
    return make_raw(std::move(rat), std::move(irr), d);
}

QuadraticReal operator/(const QuadraticReal& u, const QuadraticReal& v) {
    return u * v.inverse();
}

bool operator==(const QuadraticReal& u, const QuadraticReal& v) {
    return u.rat_ == v.rat_ && u.irr_ == v.irr_ && u.disc_ == v.disc_;
}

QuadraticReal quad_sqrt(const Int& d) {
    return QuadraticReal(Rational(0), Rational(1), d);
}

std::string render_quadratic(const QuadraticReal& v) {
    if (v.is_rational()) return render_rational(v.rat());
    std::string sqrt_part;
    Rational abs_irr = abs(v.irr());
    if (abs_irr != 1) sqrt_part = render_rational(abs_irr) + "*";
    sqrt_part += "sqrt(" + v.disc().get_str() + ")";
    bool neg = v.irr() < 0;
    if (v.rat() == 0) return (neg ? "-" : "") + sqrt_part;
    return render_rational(v.rat()) + (neg ? "-" : "+") + sqrt_part;
}

namespace {

// Splits s into at most two top-level terms at '+'/'-' (sign kept with the
// term). Signs inside "sqrt(...)" cannot occur; '-' directly after '(' or
// at position 0 is a leading sign, not a separator.
struct Term {
    std::string text;  // without leading sign
    int sign = 1;
};

std::vector<Term> split_terms(const std::string& s) {
    std::vector<Term> terms;
    std::string cur;
    int sign = 1;
    bool at_term_start = true;
    for (size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        if (ch == ' ') continue;
        if ((ch == '+' || ch == '-') && !at_term_start) {
            terms.push_back({cur, sign});
            cur.clear();
            sign = ch == '-' ? -1 : 1;
            at_term_start = true;
            continue;
        }
        if (ch == '+' || ch == '-') {
            if (ch == '-') sign = -sign;
            continue;
        }
        cur += ch;
        at_term_start = false;
    }
    if (cur.empty()) throw std::invalid_argument("parse_quadratic: empty term");
    terms.push_back({cur, sign});
    return terms;
}

}  // namespace

QuadraticReal parse_quadratic(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_quadratic: empty string");
    Rational rat(0), irr(0);
    Int disc(0);
    for (const Term& t : split_terms(s)) {
        size_t pos = t.text.find("sqrt(");
        if (pos == std::string::npos) {
            rat += Rational(t.sign) * parse_rational(t.text);
            continue;
        }
        if (t.text.back() != ')')
            throw std::invalid_argument("parse_quadratic: malformed sqrt in '" + s + "'");
        std::string inner = t.text.substr(pos + 5, t.text.size() - pos - 6);
        Rational coeff(1);
        if (pos > 0) {
            if (t.text[pos - 1] != '*')
                throw std::invalid_argument("parse_quadratic: expected '*' before sqrt");
            coeff = parse_rational(t.text.substr(0, pos - 1));
        }
        Int d(inner, 10);
        if (d <= 0)
            throw std::invalid_argument("parse_quadratic: sqrt argument must be positive");
        if (disc != 0 && disc != d)
            throw std::invalid_argument("parse_quadratic: mixed sqrt arguments");
        disc = d;
        irr += Rational(t.sign) * coeff;
    }
    if (irr == 0 || disc == 0) return QuadraticReal(rat);
    return QuadraticReal(rat, irr, disc);
}

}  // namespace zcy
