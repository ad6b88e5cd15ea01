#pragma once

#include "zcocycle/matrix.hpp"
#include "zcocycle/rational.hpp"

namespace zcy {

// Two-variable Dedekind-Rademacher sum
//   S(a,c;x) = sum_{m mod c} B1(x1 + (x2+m) a/c) B1((x2+m)/c),
// evaluated by direct summation over m in {0,...,|c|-1}.
Rational dedekind_rademacher(const Int& a, const Int& c, const RationalPoint& x);

}  // namespace zcy
