from __future__ import annotations

from fractions import Fraction

import mpmath

from salemforge.exact import intpoly as ip
from salemforge.exact import realalg as ra

LEHMER = [1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]


def bisect_float(poly, lo, hi, steps=200):
    """Numeric bisection oracle (float only used to pick the expected side)."""
    f = lambda x: sum(c * x ** i for i, c in enumerate(poly))
    for _ in range(steps):
        mid = (lo + hi) / 2
        if f(lo) * f(mid) <= 0:
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2


def test_no_real_roots():
    assert ra.isolate_real_roots([1, 0, 1]) == []


def test_quadratic_roots():
    roots = ra.isolate_real_roots([1, -3, 1])
    assert len(roots) == 2
    big, small = roots
    big.refine_below(Fraction(1, 100))
    small.refine_below(Fraction(1, 100))
    # (3 + sqrt 5)/2 ~ 2.618, (3 - sqrt 5)/2 ~ 0.382 by the quadratic formula
    assert Fraction(26, 10) < big.lo and big.hi < Fraction(27, 10)
    assert Fraction(3, 10) < small.lo and small.hi < Fraction(4, 10)


def test_lehmer_largest_root():
    roots = ra.isolate_real_roots(LEHMER)
    largest = roots[0]
    largest.refine_below(Fraction(1, 1000))
    assert Fraction(117, 100) < largest.lo and largest.hi < Fraction(118, 100)
    oracle = bisect_float(LEHMER, 1.1, 1.3)
    assert abs(float(largest) - oracle) < 1e-9


def test_descending_order_disjoint_intervals():
    p = ip.mul(ip.mul([-1, 1], [-2, 1]), [3, 1])  # roots 1, 2, -3
    roots = ra.isolate_real_roots(p)
    vals = [float(r) for r in roots]
    assert vals == sorted(vals, reverse=True)
    for a, b in zip(roots, roots[1:]):
        assert a.lo >= b.hi


def test_sign_of_poly_at():
    sqrt5 = ra.isolate_real_roots([-5, 0, 1])[0]  # positive root of y^2-5
    assert ra.sign_of_poly_at([0, 1], sqrt5) == 1
    assert ra.sign_of_poly_at([-5, 0, 1], sqrt5) == 0
    assert ra.sign_of_poly_at([-2, 1], sqrt5) == 1  # sqrt 5 > 2
    assert ra.sign_of_poly_at([2, -1], sqrt5) == -1


def test_sign_against_highprec_float():
    # 100-digit float evaluation agrees on nondegenerate cases
    mpmath.mp.dps = 100
    polys = [[1, -3, 1], LEHMER, [-2, 0, 0, 1]]
    exprs = [[1, 2, -1], [0, 0, 1], [-1, 1], [3, -5, 1, 1]]
    for p in polys:
        for root in ra.isolate_real_roots(p):
            root.refine_below(Fraction(1, 10 ** 40))
            x = mpmath.mpf(root.lo.numerator) / root.lo.denominator
            for e in exprs:
                val = mpmath.polyval(e[::-1], x)
                got = ra.sign_of_poly_at(e, root)
                if abs(val) > mpmath.mpf(10) ** -60:
                    assert got == (1 if val > 0 else -1)


def test_compare_equal_roots_different_polys():
    a = ra.isolate_real_roots([-5, 0, 1])[0]
    b = ra.isolate_real_roots(ip.mul([-5, 0, 1], [-1, 1]))[0]  # same sqrt5 root
    assert a.compare(b) == 0
    c = ra.isolate_real_roots([-2, 1])[0]
    assert a.compare(c) == 1
    assert c.compare(a) == -1


def test_rational_algebraic():
    half = ra.rational_algebraic(Fraction(1, 2))
    assert ra.sign_of_poly_at([(-1), 2], half) == 0  # 2y - 1 vanishes
    assert half.sign() == 1
