#include "zcocycle/cocycle.hpp"

#include "zcocycle/dedekind.hpp"

namespace zcy {

namespace {

Int gcd(const Int& x, const Int& y) {
    Int g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return g;
}

int int_sign(const Int& n) {
    return mpz_sgn(n.get_mpz_t());
}

bool both_integral(const RationalPoint& x) {
    return is_integer(x.x1) && is_integer(x.x2);
}

}  // namespace

QuadraticReal quad_mobius(const IntMatrix2& gamma, const QuadraticReal& t) {
    if (t.is_rational()) throw std::invalid_argument("quad_mobius: tau must be irrational");
    if (gamma.a == 0 && gamma.c == 0)
        throw std::invalid_argument("quad_mobius: zero first column");
    QuadraticReal num = QuadraticReal(Rational(gamma.b)) + QuadraticReal(Rational(gamma.d)) * t;
    QuadraticReal den = QuadraticReal(Rational(gamma.a)) + QuadraticReal(Rational(gamma.c)) * t;
    return num / den;
}

QuadraticReal zeta0(const IntMatrix2& gamma, const RationalPoint& x, const QuadraticReal& tau) {
    if (tau.is_rational()) throw std::invalid_argument("zeta0: tau must be irrational");
    if (gamma.det() == 0) throw std::invalid_argument("zeta0: singular matrix");
    if (gamma.c == 0) return QuadraticReal(Rational(0));

    const Int& a = gamma.a;
    const Int& c = gamma.c;
    Int g = gcd(a, c);

    // alpha = a + c tau, nonzero since tau is irrational.
    QuadraticReal alpha = QuadraticReal(Rational(a)) + QuadraticReal(Rational(c)) * tau;

    Rational arg1 = (Rational(c) * x.x1 - Rational(a) * x.x2) / Rational(g);
    Rational two_c(2 * c);
    QuadraticReal term1 =
        alpha.inverse() * QuadraticReal(Rational(g * g) / two_c * bernoulli_bar2(arg1));
    QuadraticReal term2 = alpha * QuadraticReal(bernoulli_bar2(x.x2) / two_c);
    QuadraticReal term3{Rational(int_sign(c)) * dedekind_rademacher(-a, c, x)};

    QuadraticReal result = term1 + term2 + term3;
    if (both_integral(x)) {
        int s = int_sign(c) * alpha.sign();
        result = result - QuadraticReal(Rational(s, 4));
    }
    return result;
}

QuadraticReal z0_base(const RationalPoint& x, const QuadraticReal& tau) {
    if (tau.is_rational()) throw std::invalid_argument("z0_base: tau must be irrational");
    QuadraticReal result =
        tau.inverse() * QuadraticReal(bernoulli_bar2(x.x1) / 2) +
        tau * QuadraticReal(bernoulli_bar2(x.x2) / 2) +
        QuadraticReal(bernoulli_bar1(x.x1) * bernoulli_bar1(x.x2));
    if (both_integral(x)) result = result - QuadraticReal(Rational(tau.sign(), 4));
    return result;
}

QuadraticReal act(const IntMatrix2& gamma, const DistributionEvaluator& nu,
                  const RationalPoint& x, const QuadraticReal& tau) {
    Int det = gamma.det();
    if (det == 0) throw std::invalid_argument("act: singular matrix");
    QuadraticReal tau_out = quad_mobius(gamma, tau);
    QuadraticReal sum{Rational(0)};
    for (const RationalPoint& mu : coset_reps(gamma)) {
        RationalPoint shifted{x.x1 + mu.x1, x.x2 + mu.x2};
        sum = sum + nu(apply_inverse_transpose(gamma, shifted), tau_out);
    }
    if (int_sign(det) < 0) sum = -sum;
    return sum;
}

QuadraticReal zeta0_via_action(const IntMatrix2& gamma, const RationalPoint& x,
                               const QuadraticReal& tau) {
    if (gamma.c == 0) throw std::invalid_argument("zeta0_via_action: c must be nonzero");
    IntMatrix2 sigma{1, gamma.a, 0, gamma.c};
    return act(sigma, z0_base, x, tau);
}

QuadraticReal hyperbolic_fixed_tau(const IntMatrix2& gamma) {
    // Root of c t^2 + (a-d) t - b = 0 with positive sqrt coefficient.
    // disc = (a-d)^2 + 4bc = (a+d)^2 - 4 for det 1.
    Int trace = gamma.a + gamma.d;
    Int disc = trace * trace - 4;
    Rational base(gamma.d - gamma.a, 2 * gamma.c);
    base.canonicalize();
    Rational coeff(1, 2 * gamma.c);
    coeff.canonicalize();
    if (coeff < 0) coeff = -coeff;
    return QuadraticReal(base, coeff, disc);
}

Rational zeta0_rational_case(const IntMatrix2& gamma, const RationalPoint& x) {
    if (!gamma.is_sl2())
        throw HypothesisError(HypothesisCode::kNotSl2, "zeta0_rational_case: matrix not in SL2(Z)");
    Int trace = gamma.a + gamma.d;
    if (gamma.c == 0 || abs(trace) <= 2)
        throw HypothesisError(HypothesisCode::kNotHyperbolic,
                              "zeta0_rational_case: matrix not hyperbolic with c != 0");
    RationalPoint y = apply_inverse_transpose(gamma, x);
    if (!is_integer(y.x1 - x.x1) || !is_integer(y.x2 - x.x2))
        throw HypothesisError(HypothesisCode::kCongruenceFailed,
                              "zeta0_rational_case: x gamma^{-T} != x mod Z^2");

    QuadraticReal tau = hyperbolic_fixed_tau(gamma);
    QuadraticReal alpha = QuadraticReal(Rational(gamma.a)) + QuadraticReal(Rational(gamma.c)) * tau;

    Rational result = Rational(trace, 2 * gamma.c);
    result.canonicalize();
    result *= bernoulli_bar2(x.x2);
    result += Rational(int_sign(gamma.c)) * dedekind_rademacher(-gamma.a, gamma.c, x);
    if (both_integral(x)) {
        int s = int_sign(gamma.c) * alpha.sign();
        result -= Rational(s, 4);
    }
    return result;
}

QuadraticReal cocycle_residual(const IntMatrix2& A, const IntMatrix2& B,
                               const RationalPoint& x, const QuadraticReal& tau) {
    Int detA = A.det();
    Int detB = B.det();
    if (abs(detA) != 1 || abs(detB) != 1)
        throw std::invalid_argument("cocycle_residual: A, B must have det +-1");
    DistributionEvaluator zb = [&B](const RationalPoint& y, const QuadraticReal& t) {
        return zeta0(B, y, t);
    };
    return zeta0(A * B, x, tau) - zeta0(A, x, tau) - act(A, zb, x, tau);
}

}  // namespace zcy
