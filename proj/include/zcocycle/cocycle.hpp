#pragma once

#include <functional>
#include <stdexcept>

#include "zcocycle/matrix.hpp"
#include "zcocycle/quadratic.hpp"

namespace zcy {

// Violated hypothesis of the rational special-value formula.
enum class HypothesisCode { kNotSl2, kNotHyperbolic, kCongruenceFailed };

class HypothesisError : public std::invalid_argument {
public:
    HypothesisError(HypothesisCode code, const std::string& what)
        : std::invalid_argument(what), code_(code) {}
    HypothesisCode code() const { return code_; }

private:
    HypothesisCode code_;
};

// Mobius image (b + d t)/(a + c t) of an irrational t under [[a,b],[c,d]];
// this is how tau = omega2/omega1 transforms under omega -> gamma^T omega.
QuadraticReal quad_mobius(const IntMatrix2& gamma, const QuadraticReal& t);

// The explicit cocycle value at gamma, evaluated at (x, tau). Zero when
// c = 0; otherwise the four-term combination of periodic Bernoulli values,
// a Dedekind-Rademacher sum, and an integrality indicator.
QuadraticReal zeta0(const IntMatrix2& gamma, const RationalPoint& x, const QuadraticReal& tau);

// Base distribution: the cocycle at the inversion matrix [[0,-1],[1,0]],
//   (1/(2 tau)) B2(x1) + (tau/2) B2(x2) + B1(x1) B1(x2)
//     - (sgn(tau)/4) 1_Z(x1) 1_Z(x2).
QuadraticReal z0_base(const RationalPoint& x, const QuadraticReal& tau);

using DistributionEvaluator =
    std::function<QuadraticReal(const RationalPoint&, const QuadraticReal&)>;

// Monoid action on distributions:
//   (gamma . nu)(x, tau) = sgn(det) sum_{mu in coset_reps(gamma)}
//                              nu((x+mu) gamma^{-T}, quad_mobius(gamma, tau)).
QuadraticReal act(const IntMatrix2& gamma, const DistributionEvaluator& nu,
                  const RationalPoint& x, const QuadraticReal& tau);

// The cocycle value through the action route: [[1,a],[0,c]] . z0_base.
// Agrees exactly with zeta0 whenever c != 0.
QuadraticReal zeta0_via_action(const IntMatrix2& gamma, const RationalPoint& x,
                               const QuadraticReal& tau);

// Rational special value for hyperbolic gamma in SL2(Z) with c != 0 when x
// is fixed by gamma^{-T} mod Z^2:
//   (a+d)/(2c) B2(x2) + sgn(c) S(-a,c;x) - (sgn(c alpha)/4) 1_Z(x1) 1_Z(x2),
// alpha = a + c tau* for a fixed root tau* of c t^2 + (a-d) t - b = 0.
Rational zeta0_rational_case(const IntMatrix2& gamma, const RationalPoint& x);

// The fixed root tau* used above (positive sqrt coefficient).
QuadraticReal hyperbolic_fixed_tau(const IntMatrix2& gamma);

// zeta0(AB) - zeta0(A) - A.zeta0(B), which the cocycle law forces to zero.
QuadraticReal cocycle_residual(const IntMatrix2& A, const IntMatrix2& B,
                               const RationalPoint& x, const QuadraticReal& tau);

}  // namespace zcy
