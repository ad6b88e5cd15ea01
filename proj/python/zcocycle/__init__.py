"""Exact evaluation of a zeta cocycle at s=0, Dedekind-Rademacher sums, and
Ehrhart quasi-polynomials of a triangle family.

All values are exchanged as exact strings: rationals "p/q", quadratic reals
"p/q+r/s*sqrt(D)", matrices "a,b,c,d", points "p/q,r/s". ``as_fraction``
converts a rational string to ``fractions.Fraction``.
"""

from fractions import Fraction

from ._zcocycle import (
    content,
    eval_dedekind,
    eval_zeta0,
    eval_zeta0_rational,
    g_coefficient,
    hayes_residual,
    lattice_point_count,
    run_suite,
    suite_names,
    theorem3_residual,
)

__all__ = [
    "as_fraction",
    "content",
    "eval_dedekind",
    "eval_zeta0",
    "eval_zeta0_rational",
    "g_coefficient",
    "hayes_residual",
    "lattice_point_count",
    "run_suite",
    "suite_names",
    "theorem3_residual",
]


def as_fraction(value: str) -> Fraction:
    """Parse an exact rational string "p/q" (or "n") into a Fraction."""
    return Fraction(value)
