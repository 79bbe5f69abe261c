from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

from salemforge.exact import intmatrix as im


def minor_gcd_divisors(m, k):
    """Oracle: product d1*...*dk of elementary divisors equals the gcd of all
    k x k minors (computed by brute-force expansion)."""
    from itertools import combinations
    n_rows = len(m)
    n_cols = len(m[0])
    g = 0
    for rows in combinations(range(n_rows), k):
        for cols in combinations(range(n_cols), k):
            sub = [[m[i][j] for j in cols] for i in rows]
            g = gcd(g, abs(im.det_bareiss(sub)))
    return g


A6_GRAM = [
    [-2, 1, 0, 0, 0, 0],
    [1, -2, 1, 0, 0, 0],
    [0, 1, -2, 1, 0, 0],
    [0, 0, 1, -2, 1, 0],
    [0, 0, 0, 1, -2, 1],
    [0, 0, 0, 0, 1, -2],
]


def test_snf_identity():
    s, u, v = im.smith_normal_form(im.identity(3))
    assert s == im.identity(3)


def test_snf_hand_cases():
    s, u, v = im.smith_normal_form([[2, 0], [0, 4]])
    assert [s[i][i] for i in range(2)] == [2, 4]
    s, u, v = im.smith_normal_form([[2, 1], [1, 2]])
    assert [s[i][i] for i in range(2)] == [1, 3]


def test_snf_a6_gram():
    s, u, v = im.smith_normal_form(A6_GRAM)
    diag = [s[i][i] for i in range(6)]
    assert diag == [1, 1, 1, 1, 1, 7]
    # cross-check with the minor-gcd oracle
    prod = 1
    for k in range(1, 7):
        g = minor_gcd_divisors(A6_GRAM, k)
        dk = g // prod
        prod = g
        assert diag[k - 1] == dk


def test_snf_random_properties():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randint(1, 4)
        m = rng.randint(1, 4)
        a = [[rng.randint(-6, 6) for _ in range(m)] for _ in range(n)]
        s, u, v = im.smith_normal_form(a)
        assert im.matmul(im.matmul(u, a), v) == s
        assert abs(im.det_bareiss(u)) == 1
        assert abs(im.det_bareiss(v)) == 1
        diag = [s[i][i] for i in range(min(n, m))]
        for d1, d2 in zip(diag, diag[1:]):
            assert d2 == 0 or (d1 != 0 and d2 % d1 == 0) or (d1 == 0 and d2 == 0)


def test_charpoly_vs_det():
    rng = random.Random(9)
    for _ in range(15):
        n = rng.randint(1, 5)
        a = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        cp = im.charpoly(a)
        assert cp[-1] == 1
        # det(xI - a) at x=0 is (-1)^n det a
        assert cp[0] == (-1) ** n * im.det_bareiss(a)
        # evaluate at a few integers against Bareiss of (xI - a)
        for x in (1, -2, 3):
            shifted = [[(x if i == j else 0) - a[i][j] for j in range(n)] for i in range(n)]
            val = sum(c * x ** i for i, c in enumerate(cp))
            assert val == im.det_bareiss(shifted)


def test_kernel_basis_saturated():
    a = [[2, 4, 6], [1, 2, 3]]
    ker = im.kernel_basis(a)
    assert len(ker) == 2
    for v in ker:
        assert im.matvec(a, v) == [0, 0]
    # saturation: the kernel contains primitive vectors like (-2, 1, 0)
    span = im.hnf_rows(ker)
    assert im.hnf_rows(span + [[-2, 1, 0]]) == span


def test_inverse_rational():
    a = [[2, 1], [1, 2]]
    inv = im.inverse_rational(a)
    assert inv == [[Fraction(2, 3), Fraction(-1, 3)], [Fraction(-1, 3), Fraction(2, 3)]]


def test_hnf_rows():
    h = im.hnf_rows([[0, 2], [3, 1]])
    assert h == [[3, 1], [0, 2]]


def test_lll_reduces_norm():
    basis = [[1, 0, 0, 1345], [0, 1, 0, 35], [0, 0, 1, 154]]
    red = im.lll_reduce(basis)
    # lattice unchanged (same HNF), vectors not longer than the input max
    assert im.hnf_rows(red) == im.hnf_rows(basis)
    norm = lambda v: sum(x * x for x in v)
    assert max(norm(v) for v in red) <= max(norm(v) for v in basis)
