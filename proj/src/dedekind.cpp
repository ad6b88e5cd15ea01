#include "zcocycle/dedekind.hpp"

#include <stdexcept>

namespace zcy {

Rational dedekind_rademacher(const Int& a, const Int& c, const RationalPoint& x) {
    if (c == 0) throw std::invalid_argument("dedekind_rademacher: c must be nonzero");
    Rational a_over_c(a, c);
    a_over_c.canonicalize();
    Rational inv_c(1, c);
    inv_c.canonicalize();
    Rational sum(0);
    Int bound = abs(c);
    for (Int m = 0; m < bound; ++m) {
        Rational x2m = x.x2 + Rational(m);
        Rational f1 = bernoulli_bar1(x.x1 + x2m * a_over_c);
        if (f1 == 0) continue;
        sum += f1 * bernoulli_bar1(x2m * inv_c);
    }
    return sum;
}

}  // namespace zcy
