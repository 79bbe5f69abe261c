"""Even integral lattices: discriminant groups and forms, signatures,
short-vector enumeration, orthogonal sums, and the standard catalog of
lattices used by the assembly pipeline.

Conventions: Gram matrices are integer, symmetric, nondegenerate with even
diagonal; definite lattices are stored negative definite (roots have square
-2).  Vectors are coefficient columns in the lattice basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import intmatrix as im
from .exact import intfactor


class LatticeError(ValueError):
    pass


@dataclass(frozen=True)
class IntLattice:
    """Even nondegenerate symmetric bilinear form given by a Gram matrix."""

    gram: tuple

    def __post_init__(self):
        g = [list(r) for r in self.gram]
        if any(len(r) != len(g) for r in g):
            raise LatticeError("Gram matrix must be square")
        if not im.is_symmetric(g):
            raise LatticeError("Gram matrix must be symmetric")
        if any(g[i][i] % 2 for i in range(len(g))):
            raise LatticeError("lattice is not even")
        if im.det_bareiss(g) == 0:
            raise LatticeError("degenerate bilinear form")
        object.__setattr__(self, "gram", tuple(tuple(r) for r in g))

    @property
    def rank(self) -> int:
        return len(self.gram)

    def gram_rows(self) -> list:
        return [list(r) for r in self.gram]

    def det(self) -> int:
        return im.det_bareiss(self.gram_rows())

    def inner(self, v, w) -> int:
        return sum(v[i] * sum(self.gram[i][j] * w[j] for j in range(self.rank))
                   for i in range(self.rank))

    def norm(self, v) -> int:
        return self.inner(v, v)


def make_lattice(rows) -> IntLattice:
    return IntLattice(tuple(tuple(r) for r in rows))


def signature(lat: IntLattice) -> tuple[int, int]:
    """Exact (n_plus, n_minus) by rational congruence diagonalization."""
    n = lat.rank
    a = [[Fraction(x) for x in row] for row in lat.gram_rows()]
    pos = neg = 0
    for k in range(n):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][i] != 0), None)
            if swap is not None:
                a[k], a[swap] = a[swap], a[k]
                for row in a:
                    row[k], row[swap] = row[swap], row[k]
            else:
                j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if j is None:
                    continue
                # x_k -> x_k + x_j makes the diagonal entry 2*a[k][j] != 0
                for col in range(n):
                    a[k][col] += a[j][col]
                for row in a:
                    row[k] += row[j]
        d = a[k][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            if a[i][k] != 0:
                f = a[i][k] / d
                for col in range(n):
                    a[i][col] -= f * a[k][col]
                for row in a:
                    row[i] -= f * row[k]
    return pos, neg


def is_negative_definite(lat: IntLattice) -> bool:
    return signature(lat) == (0, lat.rank)


def is_hyperbolic(lat: IntLattice) -> bool:
    return signature(lat)[0] == 1


class FiniteQuadraticModule:
    """The discriminant group A_L = L^dual / L with its Q/Z bilinear and
    Q/2Z quadratic forms.

    Elements are integer coefficient tuples over the cyclic generators;
    generator i has order ``orders[i]`` and lift ``lifts[i]`` (a rational
    vector in the lattice basis).
    """

    def __init__(self, lattice: IntLattice, orders, lifts, coord_map):
        self.lattice = lattice
        self.orders = list(orders)
        self.lifts = [list(v) for v in lifts]
        # integer matrix sending w in L^dual (lattice coords) to generator
        # coordinates: coords(w) = coord_map . (G w)  taken mod orders
        self._coord_map = coord_map

    @property
    def ngens(self) -> int:
        return len(self.orders)

    def order(self) -> int:
        out = 1
        for d in self.orders:
            out *= d
        return out

    def zero(self):
        return (0,) * self.ngens

    def reduce(self, coeffs):
        return tuple(c % d for c, d in zip(coeffs, self.orders))

    def lift(self, coeffs) -> list:
        n = self.lattice.rank
        out = [Fraction(0)] * n
        for c, g in zip(coeffs, self.lifts):
            for i in range(n):
                out[i] += c * g[i]
        return out

    def coords_of(self, w) -> tuple:
        """Generator coordinates of a dual vector w (rational, lattice basis)."""
        g = self.lattice.gram_rows()
        gw = [sum(Fraction(g[i][j]) * w[j] for j in range(len(w))) for i in range(len(w))]
        if any(x.denominator != 1 for x in gw):
            raise LatticeError("vector is not in the dual lattice")
        c = [sum(self._coord_map[i][j] * int(gw[j]) for j in range(len(gw)))
             for i in range(len(self._coord_map))]
        return self.reduce(c)

    def bilinear(self, a, b) -> Fraction:
        """b_L value in [0, 1)."""
        va, vb = self.lift(a), self.lift(b)
        g = self.lattice.gram_rows()
        val = sum(va[i] * g[i][j] * vb[j] for i in range(len(va)) for j in range(len(vb)))
        return val % 1

    def quadratic(self, a) -> Fraction:
        """q_L value in [0, 2)."""
        v = self.lift(a)
        g = self.lattice.gram_rows()
        val = sum(v[i] * g[i][j] * v[j] for i in range(len(v)) for j in range(len(v)))
        return val % 2

    def elements(self):
        def rec(prefix):
            if len(prefix) == self.ngens:
                yield tuple(prefix)
                return
            for c in range(self.orders[len(prefix)]):
                yield from rec(prefix + [c])
        yield from rec([])

    def __repr__(self):
        return f"FiniteQuadraticModule(orders={self.orders})"


def discriminant_group(lat: IntLattice) -> FiniteQuadraticModule:
    """Discriminant group with forms, from the Smith normal form of the Gram
    matrix; generators ordered by ascending elementary divisor."""
    g = lat.gram_rows()
    n = lat.rank
    s, u, v = im.smith_normal_form(g)
    orders = []
    lifts = []
    rows = []
    # generator i: column i of V divided by d_i; coordinates via U*(G w)
    for i in range(n):
        d = s[i][i]
        if d == 1:
            continue
        orders.append(d)
        lifts.append([Fraction(v[r][i], d) for r in range(n)])
        rows.append(list(u[i]))
    # coord_map rows map G*w (an integer vector) to generator coefficients
    return FiniteQuadraticModule(lat, orders, lifts, rows)


def is_p_elementary(lat: IntLattice, p: int) -> tuple[bool, int]:
    """Whether A_L is annihilated by p; returns (flag, number of p factors)."""
    fqm = discriminant_group(lat)
    count = 0
    for d in fqm.orders:
        if d == p:
            count += 1
        elif d != 1:
            return False, 0
    return True, count


def orthogonal_sum(l1: IntLattice, l2: IntLattice) -> IntLattice:
    n1, n2 = l1.rank, l2.rank
    g = [[0] * (n1 + n2) for _ in range(n1 + n2)]
    for i in range(n1):
        for j in range(n1):
            g[i][j] = l1.gram[i][j]
    for i in range(n2):
        for j in range(n2):
            g[n1 + i][n1 + j] = l2.gram[i][j]
    return make_lattice(g)


def _ldl(a):
    """A = L^T D L decomposition data for the Fincke-Pohst recursion:
    returns (q, mu) with Q(x) = sum_i q[i] * (x_i + sum_{j>i} mu[i][j] x_j)^2."""
    n = len(a)
    q = [Fraction(0)] * n
    mu = [[Fraction(0)] * n for _ in range(n)]
    a = [[Fraction(x) for x in row] for row in a]
    for i in range(n):
        q[i] = a[i][i] - sum(q[k] * mu[k][i] ** 2 for k in range(i))
        if q[i] <= 0:
            raise LatticeError("form is not positive definite")
        for j in range(i + 1, n):
            mu[i][j] = (a[i][j] - sum(q[k] * mu[k][i] * mu[k][j] for k in range(i))) / q[i]
    return q, mu


def enumerate_quadratic(a, bound, exact=None, center=None) -> list:
    """All integer vectors x with (x - center)^T a (x - center) <= bound for
    positive definite a (center defaults to 0, in which case x = 0 is
    skipped), or == exact when given.  Sorted lexicographically."""
    n = len(a)
    q, mu = _ldl(a)
    out = []
    x = [0] * n
    c0 = [Fraction(t) for t in center] if center is not None else None

    def rec(i, remaining):
        # offset for coordinate i given the chosen tail
        if c0 is None:
            mid = -sum(mu[i][j] * x[j] for j in range(i + 1, n))
        else:
            mid = c0[i] - sum(mu[i][j] * (x[j] - c0[j]) for j in range(i + 1, n))
        # q[i] * (x_i - mid)^2 <= remaining
        lo, hi = _int_interval(mid, remaining / q[i])
        for xi in range(lo, hi + 1):
            x[i] = xi
            used = q[i] * (Fraction(xi) - mid) ** 2
            if used > remaining:
                continue
            if i == 0:
                if center is not None or any(x):
                    total_used = bound - (remaining - used)
                    if exact is None or total_used == exact:
                        out.append(tuple(x))
            else:
                rec(i - 1, remaining - used)
        x[i] = 0

    rec(n - 1, Fraction(bound))
    return sorted(out)


def _int_interval(center: Fraction, limit: Fraction) -> tuple[int, int]:
    """All integers t with (t - center)^2 <= limit, as [lo, hi] (possibly
    empty with lo > hi); exact."""
    if limit < 0:
        return 1, 0
    center = Fraction(center)
    a, b = center.numerator, center.denominator
    c, d = Fraction(limit).numerator, Fraction(limit).denominator
    rhs = c * b * b  # valid iff d*(t*b - a)^2 <= rhs
    import math
    reach = math.isqrt(rhs // d) // b + 2
    base = a // b
    hi = base + reach
    floor_limit = base - reach - 2
    while d * (hi * b - a) ** 2 > rhs:
        hi -= 1
        if hi < floor_limit:
            return 1, 0
    lo = base - reach
    while d * (lo * b - a) ** 2 > rhs:
        lo += 1
    return lo, hi


def short_vectors(lat: IntLattice, norm: int) -> list:
    """All vectors of the given (even, negative) norm in a negative-definite
    lattice; both signs listed, canonical (lexicographic) order."""
    if norm >= 0 or norm % 2:
        raise LatticeError("norm must be a negative even integer")
    if not is_negative_definite(lat):
        raise LatticeError("short vector enumeration needs a negative definite lattice")
    a = [[-x for x in row] for row in lat.gram_rows()]
    vecs = enumerate_quadratic(a, -norm, exact=-norm)
    return [list(v) for v in vecs]


def roots(lat: IntLattice) -> list:
    return short_vectors(lat, -2)


# ---------------------------------------------------------------------------
# Standard lattices
# ---------------------------------------------------------------------------

def _path_gram(n: int) -> list:
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = -2
        if i + 1 < n:
            g[i][i + 1] = g[i + 1][i] = 1
    return g


def _e8_gram() -> list:
    # Bourbaki numbering: chain 1-3-4-5-6-7-8 with node 2 attached to 4.
    edges = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]
    g = [[0] * 8 for _ in range(8)]
    for i in range(8):
        g[i][i] = -2
    for a, b in edges:
        g[a - 1][b - 1] = g[b - 1][a - 1] = 1
    return g


def _e6_gram() -> list:
    edges = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]
    g = [[0] * 6 for _ in range(6)]
    for i in range(6):
        g[i][i] = -2
    for a, b in edges:
        g[a - 1][b - 1] = g[b - 1][a - 1] = 1
    return g


def _e6_diagram_flip() -> list:
    # Diagram automorphism 1<->6, 3<->5, fixing 2 and 4 (Bourbaki numbering).
    perm = {1: 6, 6: 1, 3: 5, 5: 3, 2: 2, 4: 4}
    f = [[0] * 6 for _ in range(6)]
    for a, b in perm.items():
        f[b - 1][a - 1] = 1
    return f


def _a6_reversal() -> list:
    # In this basis (adjacent simple roots pair to +1) the positive
    # diagram-reversal isometry is the plain antidiagonal permutation;
    # the reversed-negated formula applies to alternating-sign root bases.
    f = [[0] * 6 for _ in range(6)]
    for i in range(6):
        f[5 - i][i] = 1
    return f


STANDARD_NAMES = ("E8", "E6", "A6", "U", "C_lambda20", "M_lambda12",
                  "E6_h", "A6_g", "E8_id")


def standard_lattice(name: str):
    """Catalog lattices and isometric pairs.

    Pure lattices return an IntLattice; named pairs return a LatticeIsometry.
    U(n) is written "U(13)" etc.
    """
    from .isometry import LatticeIsometry  # local import avoids a cycle

    if name == "E8":
        return make_lattice(_e8_gram())
    if name == "E6":
        return make_lattice(_e6_gram())
    if name == "A6":
        return make_lattice(_path_gram(6))
    if name == "U":
        return make_lattice([[0, 1], [1, 0]])
    if name.startswith("U(") and name.endswith(")"):
        n = int(name[2:-1])
        if n == 0:
            raise LatticeError("degenerate twist U(0)")
        return make_lattice([[0, n], [n, 0]])
    if name == "C_lambda20":
        return LatticeIsometry(make_lattice([[-2, -1], [-1, -6]]), ((1, 1), (0, -1)))
    if name == "M_lambda12":
        return LatticeIsometry(make_lattice([[-2, -1], [-1, -4]]), ((1, 1), (0, -1)))
    if name == "E6_h":
        return LatticeIsometry(make_lattice(_e6_gram()), tuple(map(tuple, _e6_diagram_flip())))
    if name == "A6_g":
        return LatticeIsometry(make_lattice(_path_gram(6)), tuple(map(tuple, _a6_reversal())))
    if name == "E8_id":
        return LatticeIsometry(make_lattice(_e8_gram()), tuple(map(tuple, im.identity(8))))
    raise LatticeError(f"unknown standard lattice {name!r}")


# ---------------------------------------------------------------------------
# Text format: "rank <n>", n Gram rows, optional "isometry" + n rows
# ---------------------------------------------------------------------------

def parse_lattice_text(text: str):
    """Returns (IntLattice, isometry-matrix-or-None)."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines or not lines[0].startswith("rank"):
        raise LatticeError("lattice file must start with 'rank <n>'")
    n = int(lines[0].split()[1])
    rows = [[int(t) for t in lines[1 + i].split()] for i in range(n)]
    lat = make_lattice(rows)
    iso = None
    rest = lines[1 + n:]
    if rest:
        if rest[0] != "isometry":
            raise LatticeError(f"unexpected line {rest[0]!r}")
        iso = [[int(t) for t in rest[1 + i].split()] for i in range(n)]
    return lat, iso


def format_lattice_text(lat: IntLattice, iso=None) -> str:
    out = [f"rank {lat.rank}"]
    out += [" ".join(str(x) for x in row) for row in lat.gram_rows()]
    if iso is not None:
        out.append("isometry")
        out += [" ".join(str(x) for x in row) for row in iso]
    return "\n".join(out) + "\n"


def elementary_divisors(lat: IntLattice) -> list[int]:
    return discriminant_group(lat).orders


def det_prime_support(lat: IntLattice) -> set[int]:
    d = abs(lat.det())
    if d == 1:
        return set()
    return intfactor.prime_support(d)
