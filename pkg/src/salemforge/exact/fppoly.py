"""Polynomial arithmetic over F_p and extension fields F_{p^m}.

Polynomials are dense coefficient lists, constant first, entries reduced
into [0, p).  Extension field elements are coefficient tuples modulo a
stored irreducible modulus.  Factorization is squarefree + distinct-degree
+ equal-degree splitting with a deterministically seeded search, so output
is reproducible; factors are sorted by degree then coefficients.
"""

from __future__ import annotations

import random
from dataclasses import dataclass


def fp_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def fp_from_int(coeffs, p: int) -> list[int]:
    return fp_trim([c % p for c in coeffs])


def fp_add(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return fp_trim(out)


def fp_sub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return fp_trim(out)


def fp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return fp_trim([c % p for c in out])


def fp_scale(a, c, p):
    c %= p
    if c == 0:
        return []
    return fp_trim([(x * c) % p for x in a])


def fp_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    a = list(a)
    inv = pow(b[-1], p - 2, p)
    quo = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        c = (a[-1] * inv) % p
        k = len(a) - len(b)
        quo[k] = c
        for i in range(len(b)):
            a[i + k] = (a[i + k] - c * b[i]) % p
        a = fp_trim(a)
        if not a:
            break
    return fp_trim(quo), a


def fp_mod(a, b, p):
    return fp_divmod(a, b, p)[1]


def fp_gcd(a, b, p):
    while b:
        a, b = b, fp_mod(a, b, p)
    return fp_monic(a, p)


def fp_monic(a, p):
    if not a or a[-1] == 1:
        return list(a)
    inv = pow(a[-1], p - 2, p)
    return [(c * inv) % p for c in a]


def fp_pow_mod(a, e: int, mod, p):
    result = [1]
    base = fp_mod(a, mod, p)
    while e:
        if e & 1:
            result = fp_mod(fp_mul(result, base, p), mod, p)
        base = fp_mod(fp_mul(base, base, p), mod, p)
        e >>= 1
    return result


def fp_derivative(a, p):
    return fp_trim([(i * c) % p for i, c in enumerate(a)][1:])


def fp_eval(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def _prime_divisors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def fp_is_irreducible(f, p) -> bool:
    """Rabin irreducibility test over F_p."""
    f = fp_from_int(list(f), p)
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    h = fp_pow_mod(x, p ** n, f, p)
    if fp_sub(h, x, p):
        return False
    for ell in _prime_divisors(n):
        h = fp_pow_mod(x, p ** (n // ell), f, p)
        if len(fp_gcd(fp_sub(h, x, p), f, p)) > 1:
            return False
    return True


def _squarefree_decomposition(f, p):
    """List of (monic squarefree factor, multiplicity), standard char-p Yun."""
    out: list[tuple[list[int], int]] = []

    def decompose(g, mult):
        if len(g) <= 1:
            return
        d = fp_derivative(g, p)
        if not d:
            h = fp_trim([g[i] for i in range(0, len(g), p)])
            decompose(h, mult * p)
            return
        c = fp_gcd(g, d, p)
        w = fp_divmod(g, c, p)[0]
        i = 1
        while len(w) > 1:
            y = fp_gcd(w, c, p)
            z = fp_divmod(w, y, p)[0]
            if len(z) > 1:
                out.append((fp_monic(z, p), mult * i))
            c = fp_divmod(c, y, p)[0]
            w = y
            i += 1
        decompose(c, mult)

    decompose(fp_monic(f, p), 1)
    return out


def _distinct_degree(f, p):
    """Split squarefree monic f into (product of degree-d irreducibles, d)."""
    out = []
    g = list(f)
    h = fp_mod([0, 1], g, p)
    d = 0
    while len(g) - 1 >= 2 * (d + 1):
        d += 1
        h = fp_pow_mod(h, p, g, p)
        gd = fp_gcd(fp_sub(h, [0, 1], p), g, p)
        if len(gd) > 1:
            out.append((gd, d))
            g = fp_divmod(g, gd, p)[0]
            h = fp_mod(h, g, p)
    if len(g) > 1:
        out.append((g, len(g) - 1))
    return out


def _equal_degree_split(f, d, p, rng):
    """Cantor-Zassenhaus splitting of f into its degree-d irreducible factors."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = fp_trim([rng.randrange(p) for _ in range(n)])
        if len(a) <= 1:
            continue
        g = fp_gcd(a, f, p)
        if 1 < len(g) < len(f):
            h = g
        elif p == 2:
            t = fp_mod(a, f, p)
            acc = list(t)
            for _ in range(d - 1):
                t = fp_pow_mod(t, 2, f, p)
                acc = fp_add(acc, t, p)
            h = fp_gcd(acc, f, p)
        else:
            b = fp_pow_mod(a, (p ** d - 1) // 2, f, p)
            h = fp_gcd(fp_sub(b, [1], p), f, p)
        if 1 < len(h) < len(f):
            return (_equal_degree_split(h, d, p, rng)
                    + _equal_degree_split(fp_divmod(f, h, p)[0], d, p, rng))


def fp_factor(f, p):
    """Complete monic factorization over F_p.

    Returns a list of (irreducible monic factor, multiplicity), sorted by
    degree and then lexicographically on coefficient lists.
    """
    f = fp_from_int(list(f), p)
    if not f:
        raise ValueError("zero polynomial modulo p")
    rng = random.Random(0x5A1E)
    factors: list[tuple[list[int], int]] = []
    for sqf, mult in _squarefree_decomposition(f, p):
        for block, d in _distinct_degree(sqf, p):
            for irr in _equal_degree_split(block, d, p, rng):
                factors.append((fp_monic(irr, p), mult))
    factors.sort(key=lambda fm: (len(fm[0]), fm[0]))
    return factors


@dataclass(frozen=True)
class Fq:
    """The finite field F_{p^m} realized as F_p[t] / (modulus)."""

    p: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        if not fp_is_irreducible(list(self.modulus), self.p):
            raise ValueError("modulus is not irreducible over F_p")

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    @property
    def order(self) -> int:
        return self.p ** self.degree

    def make(self, coeffs):
        return tuple(fp_mod(fp_from_int(list(coeffs), self.p), list(self.modulus), self.p))

    def zero(self):
        return ()

    def one(self):
        return (1,)

    def gen(self):
        return self.make([0, 1])

    def add(self, a, b):
        return tuple(fp_add(list(a), list(b), self.p))

    def sub(self, a, b):
        return tuple(fp_sub(list(a), list(b), self.p))

    def neg(self, a):
        return tuple(fp_scale(list(a), self.p - 1, self.p))

    def mul(self, a, b):
        return tuple(fp_mod(fp_mul(list(a), list(b), self.p), list(self.modulus), self.p))

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero in F_q")
        r0, r1 = list(self.modulus), list(a)
        s0, s1 = [], [1]
        while r1:
            q, r = fp_divmod(r0, r1, self.p)
            r0, r1 = r1, r
            s0, s1 = s1, fp_sub(s0, fp_mul(q, s1, self.p), self.p)
        c = pow(r0[0], self.p - 2, self.p)
        return tuple(fp_mod(fp_scale(s0, c, self.p), list(self.modulus), self.p))

    def pow(self, a, e: int):
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one()
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def frobenius(self, a):
        """x -> x^p, the arithmetic Frobenius of F_q over F_p."""
        return self.pow(a, self.p)

    def scalar(self, c: int):
        return self.make([c])


# ---------------------------------------------------------------------------
# Linear algebra over F_q (vectors/matrices hold field element tuples)
# ---------------------------------------------------------------------------

def fq_dot(field: Fq, u, v):
    acc = field.zero()
    for a, b in zip(u, v):
        acc = field.add(acc, field.mul(a, b))
    return acc


def fq_matvec(field: Fq, m, v):
    return [fq_dot(field, row, v) for row in m]


def fq_matmul(field: Fq, a, b):
    bt = list(zip(*b))
    return [[fq_dot(field, row, col) for col in bt] for row in a]


def _fq_echelon(field: Fq, m):
    a = [row[:] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = field.inv(a[r][c])
        a[r] = [field.mul(inv, x) for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def fq_rank(field: Fq, m) -> int:
    if not m:
        return 0
    return len(_fq_echelon(field, m)[1])


def fq_kernel(field: Fq, m):
    """Basis of the right kernel {v : m v = 0} over F_q."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a, pivots = _fq_echelon(field, m)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [field.zero()] * cols
        v[fc] = field.one()
        for i, pc in enumerate(pivots):
            v[pc] = field.neg(a[i][fc])
        basis.append(v)
    return basis


def fq_charpoly(field: Fq, m):
    """Characteristic polynomial (constant first, list of field elements) of
    a square matrix over F_q via Hessenberg reduction."""
    n = len(m)
    h = [row[:] for row in m]
    for k in range(1, n):
        piv = next((i for i in range(k, n) if h[i][k - 1]), None)
        if piv is None:
            continue
        if piv != k:
            h[k], h[piv] = h[piv], h[k]
            for row in h:
                row[k], row[piv] = row[piv], row[k]
        inv = field.inv(h[k][k - 1])
        for i in range(k + 1, n):
            if h[i][k - 1]:
                f = field.mul(h[i][k - 1], inv)
                h[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(h[i], h[k])]
                for row in h:
                    row[k] = field.add(row[k], field.mul(f, row[i]))
    polys = [[field.one()]]
    for k in range(1, n + 1):
        prev = polys[k - 1]
        xp = [field.zero()] + prev
        diag = h[k - 1][k - 1]
        term = [field.sub(a, field.mul(diag, b)) for a, b in zip(xp, prev + [field.zero()])]
        run = field.one()
        for i in range(k - 1, 0, -1):
            run = field.mul(run, h[i][i - 1])
            coef = field.mul(run, h[i - 1][k - 1])
            if coef:
                pi = polys[i - 1] + [field.zero()] * (len(term) - len(polys[i - 1]))
                term = [field.sub(a, field.mul(coef, b)) for a, b in zip(term, pi)]
        polys.append(term)
    out = polys[n]
    return out + [field.zero()] * (n + 1 - len(out))


def _fqp_trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def _fqp_divmod(field: Fq, a, b):
    a = a[:]
    inv = field.inv(b[-1])
    quo = [field.zero()] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        c = field.mul(a[-1], inv)
        k = len(a) - len(b)
        quo[k] = c
        for i in range(len(b)):
            a[i + k] = field.sub(a[i + k], field.mul(c, b[i]))
        _fqp_trim(a)
        if not a:
            break
    return _fqp_trim(quo), a


def _fqp_mulmod(field: Fq, a, b, mod):
    if not a or not b:
        return []
    out = [field.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = field.add(out[i + j], field.mul(x, y))
    return _fqp_divmod(field, _fqp_trim(out), mod)[1]


def _fqp_powmod(field: Fq, a, e, mod):
    result = [field.one()]
    base = _fqp_divmod(field, a[:], mod)[1]
    while e:
        if e & 1:
            result = _fqp_mulmod(field, result, base, mod)
        base = _fqp_mulmod(field, base, base, mod)
        e >>= 1
    return result


def _fqp_sub(field: Fq, a, b):
    n = max(len(a), len(b))
    out = [field.zero()] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = field.sub(out[i], c)
    return _fqp_trim(out)


def _fqp_gcd(field: Fq, a, b):
    a, b = a[:], b[:]
    while b:
        a, b = b, _fqp_divmod(field, a, b)[1]
    return a


def fq_poly_is_irreducible(field: Fq, f) -> bool:
    """Rabin irreducibility test for a polynomial with F_q coefficients."""
    f = _fqp_trim(list(f))
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    q = field.order
    x = [field.zero(), field.one()]
    h = _fqp_powmod(field, x, q ** n, f)
    if _fqp_sub(field, h, x):
        return False
    for ell in _prime_divisors(n):
        h = _fqp_powmod(field, x, q ** (n // ell), f)
        if len(_fqp_gcd(field, f, _fqp_sub(field, h, x))) > 1:
            return False
    return True
