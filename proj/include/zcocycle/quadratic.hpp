#pragma once

#include <string>

#include "zcocycle/rational.hpp"

namespace zcy {

// Element rat + irr*sqrt(disc) of a real quadratic field Q(sqrt(disc)).
//
// disc is normalized to its square-free core at construction (any square
// factor is absorbed into irr), and disc == 0 marks a rational value
// (irr == 0). Values from different fields may only be combined when one
// of them is rational.
class QuadraticReal {
public:
    QuadraticReal() : rat_(0), irr_(0), disc_(0) {}
    QuadraticReal(Rational rat) : rat_(std::move(rat)), irr_(0), disc_(0) {}
    QuadraticReal(Rational rat, Rational irr, Int disc);

    const Rational& rat() const { return rat_; }
    const Rational& irr() const { return irr_; }
    const Int& disc() const { return disc_; }

    bool is_rational() const { return irr_ == 0; }

    // Exact sign in {-1,0,+1}, by integer case analysis only.
    int sign() const;

    QuadraticReal operator-() const;
    QuadraticReal inverse() const;
    // Galois conjugate rat - irr*sqrt(disc).
    QuadraticReal conjugate() const;

    friend QuadraticReal operator+(const QuadraticReal& u, const QuadraticReal& v);
    friend QuadraticReal operator-(const QuadraticReal& u, const QuadraticReal& v);
    friend QuadraticReal operator*(const QuadraticReal& u, const QuadraticReal& v);
    friend QuadraticReal operator/(const QuadraticReal& u, const QuadraticReal& v);
    friend bool operator==(const QuadraticReal& u, const QuadraticReal& v);
    friend bool operator!=(const QuadraticReal& u, const QuadraticReal& v) { return !(u == v); }

private:
    Rational rat_;
    Rational irr_;
    Int disc_;
};

inline int quad_sign(const QuadraticReal& t) { return t.sign(); }

// sqrt(d) as a QuadraticReal (d a positive nonsquare up to square factors).
QuadraticReal quad_sqrt(const Int& d);

// Text format: "p/q+r/s*sqrt(D)" with optional terms, e.g. "sqrt(3)",
// "26-15*sqrt(3)", "1/2+1/2*sqrt(5)". parse(render(v)) == v.
std::string render_quadratic(const QuadraticReal& v);
QuadraticReal parse_quadratic(const std::string& s);

}  // namespace zcy
