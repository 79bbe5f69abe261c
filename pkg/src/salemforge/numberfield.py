"""Principal p(x)-lattices and their twists.

For an irreducible reciprocal polynomial p of degree 2m with trace
polynomial r (p(x) = x^m r(x + 1/x)), the principal lattice is Z[x]/p(x)
with the pairing <g1, g2> = Tr(g1(x) g2(1/x) / r'(x + 1/x)) and the
isometry given by multiplication by x.  Twisting by a in Z[y]/r(y)
multiplies the form by a(f + f^(-1)).

Everything here is exact; determinant and evenness identities are verified
at construction time rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import fppoly as fp
from .exact import intfactor
from .exact import intmatrix as im
from .exact import intpoly as ip
from .isometry import LatticeIsometry
from .lattice import make_lattice


class NumberFieldError(ValueError):
    pass


def trace_polynomial(p: list) -> list:
    """Trace polynomial r with p(x) = x^(deg p / 2) r(x + 1/x); the identity
    is re-verified by expansion."""
    r = ip.symmetrize_reciprocal(p)
    if desymmetrize(r) != ip.trim(list(p)):
        raise NumberFieldError("trace polynomial identity failed")
    return r


def desymmetrize(r: list) -> list:
    """The reciprocal polynomial x^(deg r) * r(x + 1/x)."""
    m = ip.degree(r)
    acc: list = []
    for j, c in enumerate(r):
        term = ip.scale(ip.shift(_poly_pow([1, 0, 1], j), m - j), c)
        acc = ip.add(acc, term)
    return acc


def _poly_pow(p, e):
    out = [1]
    for _ in range(e):
        out = ip.mul(out, p)
    return out


def _mult_matrix(poly_mod: list, elem: list) -> list:
    """Matrix of multiplication by elem on Z[x]/poly_mod (monic)."""
    n = ip.degree(poly_mod)
    cols = []
    for i in range(n):
        prod = ip.mul(elem, [0] * i + [1])
        _, rem = ip.divmod_rational(prod, poly_mod)
        col = [Fraction(0)] * n
        for j, c in enumerate(rem):
            col[j] = Fraction(c)
        cols.append(col)
    return im.transpose(cols)


def principal_lattice(p: list) -> LatticeIsometry:
    """The principal p(x)-lattice with its multiplication-by-x isometry.

    Verifies evenness and |det| = |p(1) p(-1)|; raises NumberFieldError if
    r'(x + 1/x) is not invertible modulo p.
    """
    p = ip.trim(list(p))
    n = ip.degree(p)
    if n % 2 or not ip.is_reciprocal(p) or p[-1] != 1:
        raise NumberFieldError("need a monic reciprocal polynomial of even degree")
    r = trace_polynomial(p)
    comp = _companion(p)
    comp_inv = [[int(x) for x in row] for row in im.inverse_rational(comp)]
    y_mat = im.mat_add(comp, comp_inv)
    rp = ip.derivative(r)
    w = _poly_at(rp, y_mat)
    try:
        winv = im.inverse_rational(w)
    except ZeroDivisionError:
        raise NumberFieldError("r'(x + 1/x) is not invertible modulo p")
    # t_k = Tr(x^k / r'(y)); Gram is Toeplitz G[i][j] = t_(i-j)
    traces = {}
    power = [row[:] for row in winv]
    for k in range(n):
        traces[k] = sum(power[i][i] for i in range(n))
        power = im.matmul(comp, power)
    power = im.matmul(comp_inv, winv)
    for k in range(1, n):
        traces[-k] = sum(power[i][i] for i in range(n))
        power = im.matmul(comp_inv, power)
    gram = [[traces[i - j] for j in range(n)] for i in range(n)]
    for row in gram:
        for x in row:
            if not isinstance(x, int) and x.denominator != 1:
                raise NumberFieldError("trace form is not integral")
    gram = [[int(x) for x in row] for row in gram]
    lat = make_lattice(gram)
    expected = abs(ip.eval_at(p, 1) * ip.eval_at(p, -1))
    if abs(lat.det()) != expected:
        raise NumberFieldError("determinant differs from |p(1)p(-1)|")
    return LatticeIsometry(lat, tuple(map(tuple, comp)))


def _companion(p: list) -> list:
    n = ip.degree(p)
    m = [[0] * n for _ in range(n)]
    for i in range(1, n):
        m[i][i - 1] = 1
    for i in range(n):
        m[i][n - 1] = -p[i]
    return m


def _poly_at(poly: list, mat: list) -> list:
    n = len(mat)
    out = im.zeros(n, n)
    power = im.identity(n)
    for c in poly:
        if c:
            out = im.mat_add(out, im.mat_scale(power, c))
        power = im.matmul(power, mat)
    return out


def twist_matrix(base: LatticeIsometry, a: list) -> list:
    """Matrix of a(f + f^(-1)) on the lattice of the base pair."""
    f = base.matrix_rows()
    finv = base.inverse_matrix()
    return _poly_at(ip.trim(list(a)), im.mat_add(f, finv))


def twist(base: LatticeIsometry, a: list) -> LatticeIsometry:
    """Twist of a principal lattice by a in Z[y]/r(y): same module, form
    <a g1, g2>.  Verifies symmetry, evenness and the determinant identity
    |det L(a)| = |det L * N(a)|."""
    ma = twist_matrix(base, a)
    norm = im.det_bareiss(ma)
    if norm == 0:
        raise NumberFieldError("twist element is singular")
    g = base.lattice.gram_rows()
    gram = im.matmul(im.transpose(ma), g)
    if not im.is_symmetric(gram):
        raise NumberFieldError("twisted form is not symmetric")
    if any(gram[i][i] % 2 for i in range(len(gram))):
        raise NumberFieldError("twisted form is not even")
    lat = make_lattice(gram)
    if abs(lat.det()) != abs(base.lattice.det() * norm):
        raise NumberFieldError("twist determinant identity failed")
    return LatticeIsometry(lat, base.matrix)


def element_norm(r: list, a: list) -> int:
    """Norm of a(y) in Z[y]/r(y): the resultant res(r, a) for monic r."""
    a = ip.trim(list(a))
    if not a:
        return 0
    res = ip.resultant(r, a)
    return int(res)


@dataclass
class SplitFactor:
    factor: list          # irreducible g_i(y) mod q
    norm: int             # q^(deg g_i)
    inert_in_K: bool


@dataclass
class PrimeSplitting:
    q: int
    factors: list
    ramified_unhandled: bool = False


def prime_splitting(r: list, q: int) -> PrimeSplitting:
    """Factorization of q in the monogenic order Z[y]/r(y), with each prime
    marked inert in the reciprocal field K when its matching factor of the
    reciprocal polynomial mod q is irreducible of doubled degree."""
    if not intfactor.is_prime(q):
        raise NumberFieldError(f"{q} is not prime")
    disc = ip.resultant(r, ip.derivative(r))
    if disc % q == 0:
        return PrimeSplitting(q, [], ramified_unhandled=True)
    p = desymmetrize(r)
    sp = fp.fp_from_int(p, q)
    out = []
    for g, mult in fp.fp_factor([c % q for c in r], q):
        assert mult == 1
        lift = fp.fp_from_int(desymmetrize([c if c <= q // 2 else c - q for c in g]), q)
        match = fp.fp_gcd(sp, lift, q)
        deg = len(g) - 1
        inert = (len(match) - 1 == 2 * deg) and fp.fp_is_irreducible(match, q)
        out.append(SplitFactor([int(c) for c in g], q ** deg, inert))
    return PrimeSplitting(q, out)


# ---------------------------------------------------------------------------
# Orders in residue rings O/P^l (O = Z[x]/poly monogenic, P = (q, g))
# ---------------------------------------------------------------------------

@dataclass
class ResidueRing:
    """O / P^l for the monogenic order O = Z[x]/poly and P = (q, g(x))."""

    poly: list
    q: int
    g: list
    level: int
    basis: list = field(init=False)      # HNF rows: Z-basis of P^level
    residue_deg: int = field(init=False)

    def __post_init__(self):
        n = ip.degree(self.poly)
        self.residue_deg = ip.degree(self.g)
        ideal = _ideal_hnf(self.poly, [[self.q], list(self.g)])
        power = ideal
        for _ in range(self.level - 1):
            power = _module_product(self.poly, power, ideal)
        self.basis = power
        card = 1
        for i in range(n):
            card *= power[i][i]
        if card != (self.q ** self.residue_deg) ** self.level:
            raise NumberFieldError("ideal power has wrong index; is (q, g) prime?")

    def reduce(self, v: list) -> tuple:
        # canonical representative: rows have pivot i at column i (full HNF),
        # so a single left-to-right pass lands in the fundamental box
        out = list(v)
        for row in self.basis:
            piv = next(i for i, x in enumerate(row) if x)
            c = out[piv] // row[piv]
            if c:
                out = [a - c * b for a, b in zip(out, row)]
        return tuple(out)

    def mul(self, a, b) -> tuple:
        prod = ip.mul(list(a), list(b))
        _, rem = ip.divmod_rational(prod, self.poly)
        rem = [int(x) for x in rem]
        rem += [0] * (ip.degree(self.poly) - len(rem))
        return self.reduce(rem)

    def one(self) -> tuple:
        v = [0] * ip.degree(self.poly)
        v[0] = 1
        return self.reduce(v)

    def element(self, coeffs) -> tuple:
        _, rem = ip.divmod_rational(list(coeffs), self.poly)
        rem = [int(x) for x in rem]
        rem += [0] * (ip.degree(self.poly) - len(rem))
        return self.reduce(rem)

    def pow(self, a, e: int) -> tuple:
        out = self.one()
        base = tuple(a)
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def is_unit(self, a) -> bool:
        level_one = ResidueRing(self.poly, self.q, self.g, 1) if self.level > 1 else self
        return level_one.reduce(list(a) + [0] * (ip.degree(self.poly) - len(list(a)))) \
            != tuple([0] * ip.degree(self.poly))


def _ideal_hnf(poly: list, generators: list) -> list:
    """HNF basis (rows) of the O-ideal generated by the given elements."""
    n = ip.degree(poly)
    rows = []
    for gen in generators:
        for i in range(n):
            prod = ip.mul(list(gen), [0] * i + [1])
            _, rem = ip.divmod_rational(prod, poly)
            rem = [int(x) for x in rem]
            rows.append(rem + [0] * (n - len(rem)))
    h = im.hnf_rows(rows)
    if len(h) != n:
        raise NumberFieldError("ideal is not of full rank")
    return h


def _module_product(poly: list, a_rows: list, b_rows: list) -> list:
    n = ip.degree(poly)
    rows = []
    for u in a_rows:
        for v in b_rows:
            prod = ip.mul(list(u), list(v))
            _, rem = ip.divmod_rational(prod, poly)
            rem = [int(x) for x in rem]
            rows.append(rem + [0] * (n - len(rem)))
    h = im.hnf_rows(rows)
    if len(h) != n:
        raise NumberFieldError("module product lost rank")
    return h


def ideal_power_order(poly: list, q: int, g: list, level: int, element: list) -> int:
    """Multiplicative order of the element in (O/P^level)^x, where
    O = Z[x]/poly and P = (q, g(x))."""
    ring = ResidueRing(poly, q, g, level)
    a = ring.element(element)
    if not ring.is_unit(a):
        raise NumberFieldError("element is not invertible in the quotient")
    nq = q ** ring.residue_deg
    group_order = (nq - 1) * nq ** (level - 1)
    order = group_order
    for prime, exp in intfactor.factor_integer(group_order).items():
        for _ in range(exp):
            cand = order // prime
            if order % prime == 0 and ring.pow(a, cand) == ring.one():
                order = cand
            else:
                break
    return order
