"""Dense univariate polynomials with exact integer or rational coefficients.

Polynomials are plain lists, constant term first, with no trailing zeros;
the zero polynomial is the empty list.  All arithmetic is exact: integer
coefficients stay integers, rational coefficients use fractions.Fraction.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Poly = list


def trim(c: Sequence) -> list:
    """Strip trailing zeros so the representation is canonical."""
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def degree(p: Sequence) -> int:
    """Degree of p, with deg 0 = -1 by convention."""
    return len(p) - 1


def is_zero(p: Sequence) -> bool:
    return len(p) == 0


def leading(p: Sequence):
    if not p:
        raise ValueError("zero polynomial has no leading coefficient")
    return p[-1]


def constant(value) -> list:
    return [] if value == 0 else [value]


def add(p: Sequence, q: Sequence) -> list:
    n = max(len(p), len(q))
    out = [0] * n
    for i, c in enumerate(p):
        out[i] = c
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def neg(p: Sequence) -> list:
    return [-c for c in p]


def sub(p: Sequence, q: Sequence) -> list:
    return add(p, neg(q))


def mul(p: Sequence, q: Sequence) -> list:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def scale(p: Sequence, c) -> list:
    if c == 0:
        return []
    return [a * c for a in p]


def shift(p: Sequence, k: int) -> list:
    """Multiply by x**k."""
    if not p:
        return []
    return [0] * k + list(p)


def eval_at(p: Sequence, x):
    """Horner evaluation; exact for int/Fraction arguments."""
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p: Sequence) -> list:
    return trim([i * c for i, c in enumerate(p)][1:])


def to_fractions(p: Sequence) -> list:
    return [Fraction(c) for c in p]


def divmod_rational(p: Sequence, q: Sequence) -> tuple[list, list]:
    """Quotient and remainder in Q[x]; coefficients become Fractions."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = to_fractions(p)
    q = to_fractions(q)
    qd, qlc = degree(q), leading(q)
    quo = [Fraction(0)] * max(len(r) - len(q) + 1, 0)
    while len(r) >= len(q):
        c = r[-1] / qlc
        k = len(r) - len(q)
        quo[k] = c
        for i in range(len(q)):
            r[i + k] -= c * q[i]
        r = trim(r)
        if not r:
            break
    return trim(quo), r


def divmod_exact(p: Sequence, q: Sequence) -> tuple[list, list]:
    """Division p = quo*q + rem when it is exact over the integers.

    Raises ArithmeticError if any quotient coefficient is non-integral.
    """
    quo, rem = divmod_rational(p, q)
    for c in quo:
        if isinstance(c, Fraction) and c.denominator != 1:
            raise ArithmeticError("inexact integer polynomial division")
    return [int(c) for c in quo], [int(c) if isinstance(c, Fraction) and c.denominator == 1 else c for c in rem]


def div_exact(p: Sequence, q: Sequence) -> list:
    quo, rem = divmod_exact(p, q)
    if rem:
        raise ArithmeticError("division leaves a remainder")
    return quo


def content(p: Sequence) -> int:
    g = 0
    for c in p:
        g = gcd(g, abs(c))
    return g


def primitive_part(p: Sequence) -> list:
    if not p:
        return []
    g = content(p)
    sign = 1 if leading(p) > 0 else -1
    return [c * sign // g for c in p]


def gcd_int(p: Sequence, q: Sequence) -> list:
    """Primitive gcd in Z[x], computed through the rational Euclid chain."""
    a = to_fractions(p)
    b = to_fractions(q)
    while b:
        a, b = b, divmod_rational(a, b)[1]
    if not a:
        return []
    den = 1
    for c in a:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in a]
    return primitive_part(ints)


def square_free_part(p: Sequence) -> list:
    """Radical of p in Z[x] (primitive, positive leading coefficient)."""
    if not p or degree(p) == 0:
        return [1]
    g = gcd_int(p, derivative(p))
    if degree(g) == 0:
        return primitive_part(p)
    quo, rem = divmod_rational(p, g)
    assert not rem
    den = 1
    for c in quo:
        den = den * c.denominator // gcd(den, c.denominator)
    return primitive_part([int(c * den) for c in quo])


def resultant(p: Sequence, q: Sequence):
    """Resultant of p and q via the subresultant PRS; exact integer output
    for integer inputs.

    Raises ValueError on zero input.
    """
    if not p or not q:
        raise ValueError("resultant of the zero polynomial is undefined")
    a = [Fraction(c) for c in p]
    b = [Fraction(c) for c in q]
    res = Fraction(1)
    # Classical recursion: res(a,b) = lc(b)^(deg a - deg r) * (-1)^ach * res(b, r).
    while True:
        da, db = degree(a), degree(b)
        if db == 0:
            res *= b[0] ** da
            break
        _, r = divmod_rational(a, b)
        if not r:
            return 0
        dr = degree(r)
        res *= leading(b) ** (da - dr)
        if (da % 2) and (db % 2):
            res = -res
        a, b = b, r
    if res.denominator == 1:
        return int(res)
    return res


_cyclotomic_cache: dict[int, list] = {}


def cyclotomic_poly(k: int) -> list:
    """k-th cyclotomic polynomial by exact division of x^k - 1."""
    if k < 1:
        raise ValueError("index must be positive")
    if k in _cyclotomic_cache:
        return list(_cyclotomic_cache[k])
    num = [-1] + [0] * (k - 1) + [1]
    for d in range(1, k):
        if k % d == 0:
            num = div_exact(num, cyclotomic_poly(d))
    _cyclotomic_cache[k] = list(num)
    return num


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def is_reciprocal(p: Sequence) -> bool:
    """True when the coefficient list is a palindrome."""
    return list(p) == list(reversed(p))


def power_basis_symmetric(j: int) -> list:
    """Polynomial P_j(y) with x^j + x^-j = P_j(x + 1/x); P_0 = 2, P_1 = y."""
    if j == 0:
        return [2]
    prev, cur = [2], [0, 1]
    for _ in range(j - 1):
        prev, cur = cur, sub(mul([0, 1], cur), prev)
    return cur


def symmetrize_reciprocal(p: Sequence) -> list:
    """Write the reciprocal polynomial p of even degree 2m as x^m * r(x + 1/x)
    and return r; raises ValueError if p is not reciprocal of even degree."""
    if not is_reciprocal(p) or degree(p) % 2 != 0:
        raise ValueError("polynomial is not reciprocal of even degree")
    m = degree(p) // 2
    r = constant(p[m])
    for j in range(1, m + 1):
        r = add(r, scale(power_basis_symmetric(j), p[m + j]))
    return r


def compose(p: Sequence, q: Sequence) -> list:
    """p(q(x)), exact."""
    acc: list = []
    for c in reversed(p):
        acc = add(mul(acc, q), constant(c))
    return acc


def power_sums(p: Sequence, count: int) -> list:
    """Newton power sums s_0..s_(count-1) of the roots of monic p, exact
    rationals (integers for integer monic input)."""
    n = degree(p)
    if n < 0 or leading(p) != 1:
        raise ValueError("power sums need a monic polynomial")
    # p = x^n + a_(n-1) x^(n-1) + ... + a_0
    a = list(p)
    s = [Fraction(n)]
    for k in range(1, count):
        acc = Fraction(0)
        for i in range(1, min(k - 1, n) + 1):
            acc -= a[n - i] * s[k - i]
        if k <= n:
            acc -= k * a[n - k]
        s.append(acc)
    return [int(x) if x.denominator == 1 else x for x in s]


def format_poly(p: Sequence, var: str = "x") -> str:
    """Human form, descending degree."""
    if not p:
        return "0"
    parts = []
    for i in range(degree(p), -1, -1):
        c = p[i]
        if c == 0:
            continue
        if i == 0:
            term = str(abs(c)) if c > 0 or parts else str(c)
            mag = str(abs(c))
        else:
            mag = "" if abs(c) == 1 else str(abs(c)) + "*"
            term = f"{mag}{var}" + (f"^{i}" if i > 1 else "")
        if not parts:
            parts.append(("-" if c < 0 else "") + (term if i > 0 else str(abs(c)) if c > 0 else str(c)))
        else:
            parts.append(("- " if c < 0 else "+ ") + (term if i > 0 else mag))
    return " ".join(parts)


def parse_poly_line(line: str) -> list:
    """Parse 'deg=<n> c0 c1 ... cn' (constant first)."""
    tokens = line.split()
    if not tokens or not tokens[0].startswith("deg="):
        raise ValueError(f"malformed polynomial line: {line!r}")
    n = int(tokens[0][4:])
    coeffs = [int(t) for t in tokens[1:]]
    if n >= 0 and len(coeffs) != n + 1:
        raise ValueError(f"declared degree {n} but {len(coeffs)} coefficients")
    return trim(coeffs)


def format_poly_line(p: Sequence) -> str:
    if not p:
        return "deg=-1"
    return f"deg={degree(p)} " + " ".join(str(c) for c in p)
