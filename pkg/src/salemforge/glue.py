"""Primitive extensions of lattices along glue maps.

A glue map is an equivariant anti-isometry between q-primary parts of two
discriminant groups; its graph is a totally isotropic subgroup H of
A_M + A_N, and the primitive extension is the overlattice L with
L/(M + N) = H.  All gluings this package performs are between elementary
single-prime primary parts (as in every assembly in scope); multi-prime
gluings are chains of such extensions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import intfactor
from .exact import intmatrix as im
from .exact import intpoly as ip
from .isometry import (DiscriminantAction, LatticeIsometry, char_min_poly,
                       primary_action_matrix)
from .lattice import (FiniteQuadraticModule, IntLattice, LatticeError,
                      make_lattice, orthogonal_sum)


class GlueError(ValueError):
    pass


GLUE_SIZE_LIMIT = 10_000


@dataclass
class PrimaryPart:
    """The q-primary part of a discriminant group.

    Elements are coefficient tuples over ``gens``; the forms are evaluated
    through small precomputed matrices, so enumeration never touches the
    ambient lattice."""

    fqm: FiniteQuadraticModule
    q: int
    gens: list                 # ambient coordinate tuples
    orders: list[int]
    form_b: list               # Fractions mod 1, on generator pairs
    form_q: list               # Fractions mod 2, on generators

    @property
    def ngens(self) -> int:
        return len(self.gens)

    def size(self) -> int:
        out = 1
        for d in self.orders:
            out *= d
        return out

    def is_elementary(self) -> bool:
        return all(d == self.q for d in self.orders)

    def ambient(self, coeffs) -> tuple:
        out = [0] * self.fqm.ngens
        for c, g in zip(coeffs, self.gens):
            for i in range(self.fqm.ngens):
                out[i] += c * g[i]
        return self.fqm.reduce(tuple(out))

    def quadratic(self, coeffs) -> Fraction:
        acc = Fraction(0)
        k = self.ngens
        for i in range(k):
            acc += coeffs[i] * coeffs[i] * self.form_q[i]
            for j in range(i + 1, k):
                acc += 2 * coeffs[i] * coeffs[j] * self.form_b[i][j]
        return acc % 2

    def bilinear(self, a, b) -> Fraction:
        acc = Fraction(0)
        for i in range(self.ngens):
            for j in range(self.ngens):
                acc += a[i] * b[j] * self.form_b[i][j]
        return acc % 1


def primary_part(fqm: FiniteQuadraticModule, q: int) -> PrimaryPart:
    """q-primary component with restricted forms."""
    gens = []
    orders = []
    for i, d in enumerate(fqm.orders):
        dq, v = d, 0
        while dq % q == 0:
            dq //= q
            v += 1
        if v:
            g = [0] * fqm.ngens
            g[i] = dq
            gens.append(tuple(g))
            orders.append(q ** v)
    form_b = [[fqm.bilinear(a, b) for b in gens] for a in gens]
    form_q = [fqm.quadratic(g) for g in gens]
    return PrimaryPart(fqm, q, gens, orders, form_b, form_q)


def part_action_matrix(part: PrimaryPart, act: DiscriminantAction) -> list:
    """Matrix of the induced isometry on the part, in part coordinates."""
    ords, mat = primary_action_matrix(act, part.q)
    if ords != part.orders:
        raise GlueError("action does not match the part decomposition")
    return mat


@dataclass
class GlueMap:
    """F_q-linear equivariant anti-isometry between elementary parts,
    given by the matrix of generator images."""

    source: PrimaryPart
    target: PrimaryPart
    matrix: list      # columns: image of source generator i in target coords

    @property
    def size(self) -> int:
        return self.source.size()

    def image(self, coeffs) -> tuple:
        q = self.source.q
        return tuple(sum(self.matrix[i][j] * coeffs[j] for j in range(len(coeffs))) % q
                     for i in range(len(self.matrix)))

    def generator_pairs(self):
        k = self.source.ngens
        out = []
        for i in range(k):
            e = tuple(1 if t == i else 0 for t in range(k))
            out.append((e, self.image(e)))
        return out


def enumerate_glue_maps(part_m: PrimaryPart, part_n: PrimaryPart,
                        act_m: DiscriminantAction, act_n: DiscriminantAction) -> list[GlueMap]:
    """All isomorphisms phi: part_m -> part_n with q_M = -q_N o phi and
    phi o f_M = f_N o phi, enumerated in a deterministic order.

    Both parts must be elementary for the same prime q (every gluing in
    scope is); the search walks generator images with form filtering.
    """
    q = part_m.q
    if part_n.q != q:
        raise GlueError("glue maps require a single prime")
    if not part_m.is_elementary() or not part_n.is_elementary():
        raise GlueError("only elementary primary parts are glued")
    if part_m.size() != part_n.size():
        return []
    if part_m.size() > GLUE_SIZE_LIMIT:
        raise GlueError("part size exceeds enumeration limit")
    k = part_m.ngens
    mat_m = part_action_matrix(part_m, act_m)
    mat_n = part_action_matrix(part_n, act_n)
    targets = _nonzero_vectors(q, k)
    cols: list[tuple] = []
    found: list[list] = []

    def dfs(i):
        if i == k:
            p = [[cols[j][t] for j in range(k)] for t in range(k)]  # column matrix
            if _fq_matrix_rank(p, q) != k:
                return
            # equivariance: P * M_m = M_n * P over F_q
            left = _fq_matmul(p, mat_m, q)
            right = _fq_matmul(mat_n, p, q)
            if left == right:
                found.append(p)
            return
        e_i = tuple(1 if t == i else 0 for t in range(k))
        want_q = (-part_m.form_q[i]) % 2
        for img in targets:
            if part_n.quadratic(img) != want_q:
                continue
            ok = True
            for j in range(i):
                e_j = tuple(1 if t == j else 0 for t in range(k))
                if part_n.bilinear(img, cols[j]) != (-part_m.bilinear(e_i, e_j)) % 1:
                    ok = False
                    break
            if ok:
                cols.append(img)
                dfs(i + 1)
                cols.pop()

    dfs(0)
    return [GlueMap(part_m, part_n, p) for p in found]


def _nonzero_vectors(q, k):
    out = []

    def rec(prefix):
        if len(prefix) == k:
            if any(prefix):
                out.append(tuple(prefix))
            return
        for c in range(q):
            rec(prefix + [c])

    rec([])
    return sorted(out)


def _fq_matmul(a, b, q):
    n = len(a)
    return [[sum(a[i][t] * b[t][j] for t in range(n)) % q for j in range(n)] for i in range(n)]


def _fq_matrix_rank(a, q):
    m = [row[:] for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] % q), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, q)
        m[r] = [(x * inv) % q for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] % q:
                f = m[i][c]
                m[i] = [(x - f * y) % q for x, y in zip(m[i], m[r])]
        r += 1
    return r


@dataclass
class PrimitiveExtension:
    lattice: IntLattice
    basis: list          # rows: basis of L in (M + N) x Q coordinates
    lattice_m: IntLattice
    lattice_n: IntLattice
    glue: GlueMap | None
    index: int           # [L : M + N]


def primitive_extension(lat_m: IntLattice, lat_n: IntLattice,
                        gm: GlueMap | None) -> PrimitiveExtension:
    """Overlattice of M + N generated by the graph of the glue map; the
    index, determinant, integrality, evenness and primitivity of both
    summands are all verified."""
    m, n = lat_m.rank, lat_n.rank
    amb = orthogonal_sum(lat_m, lat_n)
    gens: list[list[Fraction]] = [[Fraction(1 if j == i else 0) for j in range(m + n)]
                                  for i in range(m + n)]
    size = 1
    if gm is not None:
        fqm_m = gm.source.fqm
        fqm_n = gm.target.fqm
        size = gm.size
        for src, img in gm.generator_pairs():
            lift = [*fqm_m.lift(gm.source.ambient(src)), *fqm_n.lift(gm.target.ambient(img))]
            gens.append([Fraction(x) for x in lift])
    den = 1
    for row in gens:
        for x in row:
            den = den * x.denominator // _gcd(den, x.denominator)
    int_rows = [[int(x * den) for x in row] for row in gens]
    h = im.hnf_rows(int_rows)
    if len(h) != m + n:
        raise GlueError("glue generators do not span full rank")
    basis = [[Fraction(x, den) for x in row] for row in h]
    g_amb = amb.gram_rows()
    gram = [[_bilinear(g_amb, basis[i], basis[j]) for j in range(m + n)]
            for i in range(m + n)]
    for i in range(m + n):
        for j in range(m + n):
            if gram[i][j].denominator != 1:
                raise GlueError("extension form is not integral")
    gram = [[int(x) for x in row] for row in gram]
    try:
        lat = make_lattice(gram)
    except LatticeError as e:
        raise GlueError(f"extension lattice invalid: {e}") from e
    det_b = _det_fraction(basis)
    index = Fraction(1) / abs(det_b)
    if index.denominator != 1 or int(index) != size:
        raise GlueError("index differs from the glue size")
    if lat.det() * int(index) ** 2 != amb.det():
        raise GlueError("determinant identity det M det N = [L:M+N]^2 det L failed")
    ext = PrimitiveExtension(lat, basis, lat_m, lat_n, gm, int(index))
    if not _is_primitive_sublattice(ext, range(m)) or \
            not _is_primitive_sublattice(ext, range(m, m + n)):
        raise GlueError("a summand is not primitive in the extension")
    return ext


def _gcd(a, b):
    from math import gcd
    return gcd(a, b)


def _bilinear(g, u, v):
    return sum(u[i] * g[i][j] * v[j] for i in range(len(u)) for j in range(len(v)))


def _det_fraction(rows):
    a = [[Fraction(x) for x in row] for row in rows]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        inv = 1 / a[c][c]
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


def _is_primitive_sublattice(ext: PrimitiveExtension, cols) -> bool:
    """The summand embeds primitively iff its coordinate matrix in the
    extension basis has trivial elementary divisors."""
    cols = list(cols)
    bt = im.transpose([[Fraction(x) for x in row] for row in ext.basis])
    sub = []
    for c in cols:
        target = [Fraction(1 if i == c else 0) for i in range(len(bt))]
        sol = im.solve_rational(bt, target)
        if sol is None or any(x.denominator != 1 for x in sol):
            return False
        sub.append([int(x) for x in sol])
    s, _, _ = im.smith_normal_form(sub)
    return all(s[i][i] == 1 for i in range(len(cols)))


def extend_isometry(fi_m: LatticeIsometry, fi_n: LatticeIsometry,
                    ext: PrimitiveExtension) -> LatticeIsometry:
    """Rewrite f_M + f_N in the basis of the extension; raises GlueError
    (EXTEND_EQUIVARIANCE) when the matrix does not descend, which happens
    exactly when the glue map is not equivariant for the pair."""
    m, n = fi_m.rank, fi_n.rank
    big = im.zeros(m + n, m + n)
    for i in range(m):
        for j in range(m):
            big[i][j] = fi_m.matrix[i][j]
    for i in range(n):
        for j in range(n):
            big[m + i][m + j] = fi_n.matrix[i][j]
    bt = im.transpose(ext.basis)  # columns are basis vectors of L
    rhs = im.matmul([[Fraction(x) for x in row] for row in big],
                    [[Fraction(x) for x in row] for row in bt])
    binv = im.inverse_rational([[Fraction(x) for x in row] for row in bt])
    out = im.matmul(binv, rhs)
    mat = []
    for row in out:
        new_row = []
        for x in row:
            if x.denominator != 1:
                raise GlueError("EXTEND_EQUIVARIANCE: isometry does not descend to the extension")
            new_row.append(int(x))
        mat.append(new_row)
    return LatticeIsometry(ext.lattice, tuple(map(tuple, mat)))


def glue_estimate_check(ext: PrimitiveExtension) -> bool:
    """|A_N / H_N| * |A_M / H_M| = |det L| (absolute value; the printed
    identity carries a sign mismatch for hyperbolic L)."""
    am = abs(ext.lattice_m.det())
    an = abs(ext.lattice_n.det())
    h = ext.index
    return (am // h) * (an // h) == abs(ext.lattice.det())


def resultant_divisibility_check(fi_m: LatticeIsometry, fi_n: LatticeIsometry,
                                 ext: PrimitiveExtension) -> bool:
    """Every prime dividing the glue size divides res(chi_M, chi_N)."""
    if ext.index == 1:
        return True
    chi_m = char_min_poly(fi_m)[0]
    chi_n = char_min_poly(fi_n)[0]
    res = ip.resultant(chi_m, chi_n)
    if res == 0:
        return True
    for p in intfactor.prime_support(ext.index):
        if res % p:
            return False
    return True
