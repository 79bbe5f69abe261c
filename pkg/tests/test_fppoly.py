from __future__ import annotations

import random

from salemforge.exact import fppoly as fp
from salemforge.exact import intpoly as ip


def brute_force_irreducible(f, p):
    """Oracle: no monic divisor of degree 1..deg-1 (small p, small degree)."""
    n = len(f) - 1

    def all_monic(d):
        def rec(prefix):
            if len(prefix) == d:
                yield prefix + [1]
                return
            for c in range(p):
                yield from rec(prefix + [c])
        yield from rec([])

    for d in range(1, n):
        for g in all_monic(d):
            if not fp.fp_divmod(list(f), g, p)[1]:
                return False
    return True


def test_factor_x2_minus_1_mod_2():
    factors = fp.fp_factor([-1, 0, 1], 2)
    assert factors == [([1, 1], 2)]


def test_factor_c12_mod_5_two_quadratics():
    c12 = ip.cyclotomic_poly(12)
    factors = fp.fp_factor(c12, 5)
    assert len(factors) == 2
    assert all(mult == 1 and len(f) == 3 for f, mult in factors)
    assert factors[0][0] != factors[1][0]
    for f, _ in factors:
        assert brute_force_irreducible(f, 5)


def test_factor_product_recovers_input():
    rng = random.Random(17)
    for p in (2, 3, 5, 13, 31):
        for _ in range(10):
            coeffs = [rng.randrange(p) for _ in range(rng.randint(2, 7))] + [1]
            f = fp.fp_from_int(coeffs, p)
            if len(f) <= 1:
                continue
            factors = fp.fp_factor(f, p)
            prod = [1]
            for g, mult in factors:
                for _ in range(mult):
                    prod = fp.fp_mul(prod, g, p)
            assert prod == fp.fp_monic(f, p)
            for g, _ in factors:
                assert fp.fp_is_irreducible(g, p)


def test_is_irreducible_examples():
    assert fp.fp_is_irreducible([1, 1, 1], 2)       # x^2+x+1 mod 2
    assert not fp.fp_is_irreducible([1, 0, 1], 2)   # (x+1)^2 mod 2
    assert fp.fp_is_irreducible([2, 0, 1], 5)       # x^2+2 mod 5


def test_fq_field_ops():
    # F_25 via x^2+2
    field = fp.Fq(5, (2, 0, 1))
    a = field.make([1, 1])
    b = field.make([3, 2])
    assert field.mul(a, field.inv(a)) == field.one()
    assert field.add(a, field.neg(a)) == field.zero()
    assert field.pow(a, field.order - 1) == field.one()
    assert field.mul(a, b) == field.mul(b, a)
    # Frobenius has order 2
    assert field.frobenius(field.frobenius(a)) == a


def test_fq_charpoly_identity():
    field = fp.Fq(5, (0, 1, 1) if False else (2, 0, 1))
    one = field.one()
    zero = field.zero()
    ident = [[one, zero], [zero, one]]
    cp = fp.fq_charpoly(field, ident)
    # (x-1)^2 = x^2 - 2x + 1
    assert cp == [field.scalar(1), field.scalar(-2), field.scalar(1)]
    assert not fp.fq_poly_is_irreducible(field, cp)


def test_fq_charpoly_companion():
    # companion matrix of x^2 + 2x + 3 over the prime field F_5
    # (irreducible: disc = 4-12 = -8 = 2, non-square mod 5)
    field = fp.Fq(5, (3, 1))
    zero, one = field.zero(), field.one()
    comp = [[zero, field.scalar(-3)], [one, field.scalar(-2)]]
    cp = fp.fq_charpoly(field, comp)
    assert cp == [field.scalar(3), field.scalar(2), one]
    assert fp.fq_poly_is_irreducible(field, cp)


def test_fq_charpoly_random_vs_fp():
    # for prime fields, compare against the integer charpoly reduced mod p
    from salemforge.exact import intmatrix as im
    rng = random.Random(23)
    p = 13
    field = fp.Fq(p, (2, 1))  # F_13 as F_p[t]/(t+2)
    for _ in range(10):
        n = rng.randint(1, 4)
        a = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
        cp = im.charpoly(a)
        aq = [[field.scalar(x) for x in row] for row in a]
        cpq = fp.fq_charpoly(field, aq)
        assert [field.scalar(c) for c in cp] == cpq


def test_fq_kernel():
    field = fp.Fq(7, (1, 0, 1))
    one, zero = field.one(), field.zero()
    m = [[one, one], [one, one]]
    ker = fp.fq_kernel(field, m)
    assert len(ker) == 1
    v = ker[0]
    assert fp.fq_matvec(field, m, v) == [zero, zero]
