"""Salem polynomials: verification of the root layout and isolation of the
leading eigenvalue, all in exact arithmetic.

A Salem polynomial of even degree d has a single real root lambda > 1, the
reciprocal root 1/lambda in (0, 1), and all other roots on the unit circle.
Equivalently its trace polynomial r (p(x) = x^(d/2) r(x + 1/x)) has one real
root in (2, oo) and d/2 - 1 real roots in (-2, 2).  Irreducibility over Z is
not certified here; catalog entries carry an asserted flag instead and are
cross-checked against independent modular data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import intpoly as ip
from .exact import realalg as ra


class SalemError(ValueError):
    pass


@dataclass
class SalemPoly:
    poly: list
    degree: int
    lambda_bracket: tuple[Fraction, Fraction]
    asserted_irreducible: bool = True

    def trace_poly(self) -> list:
        return ip.symmetrize_reciprocal(self.poly)

    def lambda_root(self) -> ra.RealAlgebraic:
        """The root lambda > 1 as a refinable RealAlgebraic."""
        return ra.isolate_real_roots(self.poly)[0]


def check_salem(poly: list) -> None:
    """Verify the Salem root layout; raises SalemError when it fails."""
    poly = ip.trim(list(poly))
    d = ip.degree(poly)
    if d < 2 or d % 2:
        raise SalemError("Salem polynomials have even degree >= 2")
    if not ip.is_reciprocal(poly):
        raise SalemError("coefficients do not form a palindrome")
    if poly[-1] != 1:
        raise SalemError("polynomial is not monic")
    r = ip.symmetrize_reciprocal(poly)
    roots = ra.isolate_real_roots(r)
    if len(roots) != d // 2:
        raise SalemError("trace polynomial is not totally real or not squarefree")
    if ip.eval_at(r, 2) == 0 or ip.eval_at(r, -2) == 0:
        raise SalemError("root at a cyclotomic point y = +/-2")
    outside = [t for t in roots if ra.sign_of_poly_at([-2, 1], t) > 0]  # y > 2
    inside = [t for t in roots
              if ra.sign_of_poly_at([-2, 1], t) < 0 and ra.sign_of_poly_at([2, 1], t) > 0]
    if len(outside) != 1 or len(inside) != d // 2 - 1:
        raise SalemError("trace roots are not (one > 2) + (rest in (-2,2))")


def make_salem(poly: list, asserted_irreducible: bool = True) -> SalemPoly:
    """Validated SalemPoly with an isolating bracket for lambda > 1."""
    poly = ip.trim(list(poly))
    check_salem(poly)
    root = ra.isolate_real_roots(poly)[0]
    root.refine_below(Fraction(1, 10 ** 10))
    return SalemPoly(poly, ip.degree(poly), (root.lo, root.hi), asserted_irreducible)
