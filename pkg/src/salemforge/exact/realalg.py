"""Exact real algebraic numbers: Sturm-sequence root isolation and sign
determination.

A RealAlgebraic is a squarefree integer polynomial together with a rational
isolating interval containing exactly one of its real roots.  The defining
polynomial need not be irreducible; every query (sign, comparison) is
decided exactly by interval refinement and polynomial gcds, never by
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import intpoly


def sturm_chain(p: list) -> list[list]:
    """Sturm chain of a squarefree polynomial, over Q."""
    chain = [intpoly.to_fractions(p), intpoly.to_fractions(intpoly.derivative(p))]
    while chain[-1]:
        rem = intpoly.divmod_rational(chain[-2], chain[-1])[1]
        if not rem:
            break
        chain.append(intpoly.neg(rem))
    return [c for c in chain if c]


def _sign_variations(chain, x: Fraction) -> int:
    signs = []
    for poly in chain:
        v = intpoly.eval_at(poly, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots_in(chain, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots in (lo, hi]."""
    return _sign_variations(chain, lo) - _sign_variations(chain, hi)


def root_bound(p: list) -> Fraction:
    """Cauchy bound: all real roots lie in (-B, B)."""
    lc = abs(intpoly.leading(p))
    m = max(abs(c) for c in p)
    return Fraction(m, lc) + 1


@dataclass
class RealAlgebraic:
    """One real root of a squarefree integer polynomial, isolated in
    (lo, hi) with rational endpoints that are not roots."""

    min_poly: list
    lo: Fraction
    hi: Fraction
    _chain: list = field(default=None, repr=False, compare=False)

    def chain(self):
        if self._chain is None:
            self._chain = sturm_chain(self.min_poly)
        return self._chain

    def refine(self) -> None:
        """Halve the isolating interval."""
        mid = (self.lo + self.hi) / 2
        if intpoly.eval_at(self.min_poly, mid) == 0:
            # nudge endpoints around an exactly-rational root
            width = (self.hi - self.lo) / 4
            self.lo, self.hi = mid - width, mid + width
            return
        if count_roots_in(self.chain(), self.lo, mid) == 1:
            self.hi = mid
        else:
            self.lo = mid

    def refine_below(self, width: Fraction) -> None:
        while self.hi - self.lo > width:
            self.refine()

    def sign(self) -> int:
        while self.lo < 0 < self.hi:
            if intpoly.eval_at(self.min_poly, Fraction(0)) == 0 and \
                    count_roots_in(self.chain(), self.lo, self.hi) == 1 and \
                    self.contains_rational(Fraction(0)):
                return 0
            self.refine()
        return 1 if self.lo >= 0 else -1

    def contains_rational(self, x: Fraction) -> bool:
        return self.lo < x < self.hi and intpoly.eval_at(self.min_poly, x) == 0

    def compare(self, other: RealAlgebraic) -> int:
        """-1, 0, +1 comparison, exact."""
        g = intpoly.gcd_int(self.min_poly, other.min_poly)
        if intpoly.degree(g) >= 1:
            gchain = sturm_chain(g)
            while True:
                lo = max(self.lo, other.lo)
                hi = min(self.hi, other.hi)
                if lo >= hi:
                    break
                if count_roots_in(gchain, lo, hi) == 1 and \
                        count_roots_in(self.chain(), lo, hi) == 1 and \
                        count_roots_in(other.chain(), lo, hi) == 1:
                    return 0
                self.refine()
                other.refine()
        while not (self.hi <= other.lo or other.hi <= self.lo):
            self.refine()
            other.refine()
        return -1 if self.hi <= other.lo else 1

    def __float__(self) -> float:
        self.refine_below(Fraction(1, 10 ** 12))
        return float((self.lo + self.hi) / 2)

    def __repr__(self) -> str:
        return f"RealAlgebraic({intpoly.format_poly(self.min_poly, 'y')} in ({self.lo},{self.hi}))"


def isolate_real_roots(p: list) -> list[RealAlgebraic]:
    """All distinct real roots of p, as RealAlgebraic values sorted in
    descending order, with pairwise disjoint isolating intervals."""
    if intpoly.is_zero(p):
        raise ValueError("cannot isolate roots of the zero polynomial")
    sqf = intpoly.square_free_part(p)
    if intpoly.degree(sqf) == 0:
        return []
    chain = sturm_chain(sqf)
    bound = root_bound(sqf)
    total = count_roots_in(chain, -bound, bound)
    roots: list[RealAlgebraic] = []

    def split(lo: Fraction, hi: Fraction, n: int):
        if n == 0:
            return
        if n == 1:
            roots.append(RealAlgebraic(sqf, lo, hi, chain))
            return
        mid = (lo + hi) / 2
        while intpoly.eval_at(sqf, mid) == 0:
            mid = (lo + 2 * mid) / 3
        left = count_roots_in(chain, lo, mid)
        split(lo, mid, left)
        split(mid, hi, n - left)

    split(-bound, bound, total)
    roots.sort(key=lambda r: r.lo)
    # make intervals pairwise disjoint
    for a, b in zip(roots, roots[1:]):
        while a.hi > b.lo:
            a.refine()
            b.refine()
    return roots[::-1]


def sign_of_poly_at(expr: list, t: RealAlgebraic) -> int:
    """Exact sign of expr(t) for an integer/rational polynomial expr.

    Zero is decided by a gcd with the defining polynomial of t; a nonzero
    sign by interval refinement with exact rational evaluation.
    """
    expr = intpoly.trim(list(expr))
    if not expr:
        return 0
    if intpoly.degree(expr) == 0:
        c = expr[0]
        return 0 if c == 0 else (1 if c > 0 else -1)
    # clear denominators; sign is unaffected
    dens = [c.denominator for c in expr if isinstance(c, Fraction)]
    if dens:
        lcm = 1
        for d in dens:
            from math import gcd as _g
            lcm = lcm * d // _g(lcm, d)
        expr = [int(c * lcm) for c in intpoly.to_fractions(expr)]
    g = intpoly.gcd_int(expr, t.min_poly)
    if intpoly.degree(g) >= 1:
        gchain = sturm_chain(g)
        if count_roots_in(gchain, t.lo, t.hi) >= 1:
            # ensure the shared root is exactly t's root
            tchain = t.chain()
            while count_roots_in(gchain, t.lo, t.hi) >= 1:
                if count_roots_in(tchain, t.lo, t.hi) == 1 and \
                        count_roots_in(gchain, t.lo, t.hi) == 1:
                    return 0
                t.refine()
    while True:
        lo_val = intpoly.eval_at(expr, t.lo)
        hi_val = intpoly.eval_at(expr, t.hi)
        img = _interval_eval(expr, t.lo, t.hi)
        if img[0] > 0:
            return 1
        if img[1] < 0:
            return -1
        if lo_val > 0 and hi_val > 0 and _no_root_inside(expr, t):
            return 1
        if lo_val < 0 and hi_val < 0 and _no_root_inside(expr, t):
            return -1
        t.refine()


def _interval_eval(expr: list, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Rational interval Horner: encloses expr([lo, hi])."""
    mn = Fraction(expr[-1])
    mx = Fraction(expr[-1])
    for c in reversed(expr[:-1]):
        candidates = (mn * lo, mn * hi, mx * lo, mx * hi)
        mn, mx = min(candidates) + c, max(candidates) + c
    return mn, mx


def _no_root_inside(expr: list, t: RealAlgebraic) -> bool:
    sqf = intpoly.square_free_part(expr)
    if intpoly.degree(sqf) < 1:
        return True
    return count_roots_in(sturm_chain(sqf), t.lo, t.hi) == 0


def rational_algebraic(x) -> RealAlgebraic:
    """Wrap a rational number as a RealAlgebraic (root of a linear poly)."""
    x = Fraction(x)
    poly = [-x.numerator, x.denominator]
    return RealAlgebraic(poly, x - 1, x + 1)
