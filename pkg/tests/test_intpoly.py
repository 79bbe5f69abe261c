from __future__ import annotations

import random
from fractions import Fraction

from salemforge.exact import intpoly as ip


def test_cyclotomic_small():
    assert ip.cyclotomic_poly(1) == [-1, 1]
    assert ip.cyclotomic_poly(6) == [1, -1, 1]
    assert ip.cyclotomic_poly(12) == [1, 0, -1, 0, 1]


def test_cyclotomic_product_identity():
    # prod_{k | n} c_k(x) = x^n - 1 for all n <= 60
    for n in range(1, 61):
        prod = [1]
        for k in range(1, n + 1):
            if n % k == 0:
                prod = ip.mul(prod, ip.cyclotomic_poly(k))
        assert prod == [-1] + [0] * (n - 1) + [1], n


def test_resultant_linear():
    assert abs(ip.resultant([-1, 1], [1, 1])) == 2


def test_resultant_vs_gcd_random():
    rng = random.Random(7)
    for _ in range(100):
        p = [rng.randint(-4, 4) for _ in range(rng.randint(2, 6))]
        q = [rng.randint(-4, 4) for _ in range(rng.randint(2, 6))]
        p = ip.trim(p)
        q = ip.trim(q)
        if not p or not q or ip.degree(p) < 1 or ip.degree(q) < 1:
            continue
        res = ip.resultant(p, q)
        g = ip.gcd_int(p, q)
        assert (res == 0) == (ip.degree(g) >= 1)


def test_resultant_multiplicative_oracle():
    # res(p, q1*q2) = res(p, q1) * res(p, q2)
    rng = random.Random(11)
    for _ in range(20):
        p = ip.trim([rng.randint(-3, 3) for _ in range(4)] + [1])
        q1 = ip.trim([rng.randint(-3, 3) for _ in range(2)] + [1])
        q2 = ip.trim([rng.randint(-3, 3) for _ in range(3)] + [1])
        assert ip.resultant(p, ip.mul(q1, q2)) == ip.resultant(p, q1) * ip.resultant(p, q2)


def test_divmod_exact_and_gcd():
    p = ip.mul([1, 2, 1], [-3, 1])
    assert ip.div_exact(p, [-3, 1]) == [1, 2, 1]
    g = ip.gcd_int(ip.mul([1, 1], [2, 3]), ip.mul([1, 1], [5, 1]))
    assert g == [1, 1]


def test_symmetrize_reciprocal():
    # x^2 - 3x + 1 -> y - 3
    assert ip.symmetrize_reciprocal([1, -3, 1]) == [-3, 1]
    # x^2 + 1 -> y
    assert ip.symmetrize_reciprocal([1, 0, 1]) == [0, 1]
    # c_12 = x^4 - x^2 + 1 -> y^2 - 3
    assert ip.symmetrize_reciprocal([1, 0, -1, 0, 1]) == [-3, 0, 1]


def test_symmetrize_reciprocal_roundtrip():
    rng = random.Random(3)
    for _ in range(20):
        m = rng.randint(1, 6)
        half = [rng.randint(-3, 3) for _ in range(m)] + [1]
        p = half[::-1] + half[1:]
        r = ip.symmetrize_reciprocal(p)
        # verify x^m * r(x + 1/x) == p by expanding r at the symmetric basis
        acc = []
        for j, c in enumerate(r):
            # c * x^m * (x + 1/x)^j = c * x^(m-j) * (x^2+1)^j
            term = ip.scale(ip.shift(_pow([1, 0, 1], j), m - j), c)
            acc = ip.add(acc, term)
        assert acc == ip.trim(p)


def _pow(p, e):
    out = [1]
    for _ in range(e):
        out = ip.mul(out, p)
    return out


def test_square_free_part():
    p = ip.mul(ip.mul([1, 1], [1, 1]), [-2, 1])
    assert ip.square_free_part(p) == ip.mul([1, 1], [-2, 1])


def test_poly_line_roundtrip():
    p = [3, 0, -1, 7]
    line = ip.format_poly_line(p)
    assert line == "deg=3 3 0 -1 7"
    assert ip.parse_poly_line(line) == p


def test_eval_fraction():
    assert ip.eval_at([1, -3, 1], Fraction(1, 2)) == Fraction(-1, 4)
