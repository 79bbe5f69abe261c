"""Isometries of lattices: characteristic/minimal polynomials, the
Salem-cyclotomic splitting, induced discriminant actions, feasible primes
and the realizability filter for hyperbolic Salem factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import fppoly as fp
from .exact import intfactor
from .exact import intmatrix as im
from .exact import intpoly as ip
from .lattice import (FiniteQuadraticModule, IntLattice, LatticeError,
                      discriminant_group, make_lattice, signature)
from .salem import SalemPoly, check_salem, SalemError


class IsometryError(ValueError):
    pass


@dataclass(frozen=True)
class LatticeIsometry:
    """A pair (L, f): f an integer matrix with f^T G f = G and det f = +/-1."""

    lattice: IntLattice
    matrix: tuple

    def __post_init__(self):
        f = [list(r) for r in self.matrix]
        g = self.lattice.gram_rows()
        n = self.lattice.rank
        if len(f) != n or any(len(r) != n for r in f):
            raise IsometryError("isometry matrix has the wrong shape")
        if im.matmul(im.matmul(im.transpose(f), g), f) != g:
            raise IsometryError("matrix does not preserve the form")
        if abs(im.det_bareiss(f)) != 1:
            raise IsometryError("isometry is not unimodular")
        object.__setattr__(self, "matrix", tuple(tuple(r) for r in f))

    @property
    def rank(self) -> int:
        return self.lattice.rank

    def matrix_rows(self) -> list:
        return [list(r) for r in self.matrix]

    def inverse_matrix(self) -> list:
        inv = im.inverse_rational(self.matrix_rows())
        return [[int(x) for x in row] for row in inv]

    def power(self, k: int) -> list:
        base = self.matrix_rows() if k >= 0 else self.inverse_matrix()
        out = im.identity(self.rank)
        for _ in range(abs(k)):
            out = im.matmul(out, base)
        return out

    def apply(self, v) -> list:
        return im.matvec(self.matrix_rows(), v)


def poly_at_matrix(poly, m) -> list:
    n = len(m)
    out = im.zeros(n, n)
    power = im.identity(n)
    for c in poly:
        if c:
            out = im.mat_add(out, im.mat_scale(power, c))
        power = im.matmul(power, m)
    return out


def char_min_poly(fi: LatticeIsometry) -> tuple[list, list, bool]:
    """Characteristic and minimal polynomial of f, plus a semisimplicity flag
    (minimal polynomial squarefree)."""
    f = fi.matrix_rows()
    chi = im.charpoly(f)
    mu = _min_poly(f)
    semisimple = ip.degree(ip.gcd_int(mu, ip.derivative(mu))) == 0
    return chi, mu, semisimple


def _min_poly(m) -> list:
    """Minimal polynomial over Q via Krylov chains, returned as a primitive
    integer polynomial with positive leading coefficient."""
    n = len(m)
    acc = [1]
    for start in range(n):
        v = [Fraction(1 if i == start else 0) for i in range(n)]
        rows = [v]
        while True:
            v = [sum(Fraction(m[i][j]) * v[j] for j in range(n)) for i in range(n)]
            sol = _express(rows, v)
            if sol is not None:
                local = _to_int(ip.trim([-c for c in sol] + [Fraction(1)]))
                break
            rows.append(v)
        acc = _poly_lcm(acc, local)
        if ip.degree(acc) == n:
            break
    return _to_int(acc)


def _express(rows, v):
    """Coefficients writing v as a combination of rows, or None."""
    a = [list(r) for r in zip(*rows)]
    return im.solve_rational(a, v)


def _poly_lcm(a, b):
    a, b = _to_int(a), _to_int(b)
    g = ip.gcd_int(a, b)
    quo, rem = ip.divmod_rational(ip.mul(a, b), g)
    assert not rem
    return _to_int(quo)


def _to_int(p):
    from math import gcd as _g
    den = 1
    fr = ip.to_fractions(p)
    for c in fr:
        den = den * c.denominator // _g(den, c.denominator)
    return ip.primitive_part([int(c * den) for c in fr]) if p else []


def cyclotomic_multiplicities(chi: list, max_rank: int | None = None) -> tuple[dict[int, int], list]:
    """Split chi into cyclotomic factors c_k^(m_k) times a remainder.

    Returns ({k: multiplicity}, remainder)."""
    rank = ip.degree(chi)
    bound = rank if max_rank is None else max_rank
    rest = list(chi)
    mults: dict[int, int] = {}
    for k in cyclotomic_indices_within(bound):
        ck = ip.cyclotomic_poly(k)
        if ip.degree(ck) > ip.degree(rest):
            continue
        while True:
            quo, rem = ip.divmod_rational(rest, ck)
            if rem:
                break
            rest = _to_int(quo)
            mults[k] = mults.get(k, 0) + 1
        if ip.degree(rest) == 0:
            break
    return mults, rest


@dataclass
class SalemSplit:
    salem_poly: list
    cyclo_poly: list
    cyclo_multiplicities: dict[int, int]
    salem_part: LatticeIsometry
    cyclo_part: LatticeIsometry
    salem_basis: list  # rows: basis of S inside L
    cyclo_basis: list


def _saturated_kernel_pair(fi: LatticeIsometry, poly: list):
    """(sublattice, restricted isometry, basis rows) for ker poly(f)."""
    f = fi.matrix_rows()
    mat = poly_at_matrix(poly, f)
    basis = im.kernel_basis(mat)
    if not basis:
        raise IsometryError("kernel is trivial")
    g = fi.lattice.gram_rows()
    k = len(basis)
    gram = [[sum(basis[i][a] * g[a][b] * basis[j][b] for a in range(fi.rank) for b in range(fi.rank))
             for j in range(k)] for i in range(k)]
    cols = im.transpose(basis)
    image = im.matmul(f, cols)
    rest = []
    bt = [list(r) for r in basis]
    for jcol in range(k):
        target = [image[i][jcol] for i in range(fi.rank)]
        sol = im.solve_rational(im.transpose(bt), target)
        if sol is None or any(x.denominator != 1 for x in sol):
            raise IsometryError("kernel is not invariant")
        rest.append([int(x) for x in sol])
    rmat = im.transpose(rest)
    sub = make_lattice(gram)
    return LatticeIsometry(sub, tuple(map(tuple, rmat))), basis


def salem_cyclotomic_split(fi: LatticeIsometry) -> SalemSplit:
    """Split (L, f) into the Salem factor S = ker s(f) and the cyclotomic
    factor C = ker c(f); verifies S hyperbolic of signature (1, d-1) and C
    negative definite."""
    chi, _, _ = char_min_poly(fi)
    mults, rest = cyclotomic_multiplicities(chi)
    if ip.degree(rest) == 0:
        raise IsometryError("characteristic polynomial has no Salem factor")
    try:
        check_salem(rest)
    except SalemError as e:
        raise IsometryError(f"non-cyclotomic factor is not Salem: {e}") from e
    cyclo = [1]
    for k, m in mults.items():
        for _ in range(m):
            cyclo = ip.mul(cyclo, ip.cyclotomic_poly(k))
    salem_pair, salem_basis = _saturated_kernel_pair(fi, rest)
    if ip.degree(cyclo) == 0:
        raise IsometryError("isometry has no cyclotomic part to split off")
    cyclo_pair, cyclo_basis = _saturated_kernel_pair(fi, cyclo)
    d = ip.degree(rest)
    if signature(salem_pair.lattice) != (1, d - 1):
        raise IsometryError("Salem factor is not hyperbolic of signature (1, d-1)")
    if signature(cyclo_pair.lattice) != (0, fi.rank - d):
        raise IsometryError("cyclotomic factor is not negative definite")
    return SalemSplit(rest, cyclo, mults, salem_pair, cyclo_pair, salem_basis, cyclo_basis)


@dataclass
class DiscriminantAction:
    """Induced action of an isometry on the discriminant group."""

    fqm: FiniteQuadraticModule
    matrix: list  # ngens x ngens integer matrix acting on generator coords

    def apply(self, coeffs):
        c = [sum(self.matrix[i][j] * coeffs[j] for j in range(len(coeffs)))
             for i in range(len(self.matrix))]
        return self.fqm.reduce(c)

    def power_apply(self, coeffs, k):
        out = tuple(coeffs)
        for _ in range(k):
            out = self.apply(out)
        return out


def discriminant_action(fi: LatticeIsometry) -> DiscriminantAction:
    """Matrix of the induced map on A_L, with form preservation verified."""
    fqm = discriminant_group(fi.lattice)
    f = fi.matrix_rows()
    cols = []
    for i in range(fqm.ngens):
        w = fqm.lift(tuple(1 if j == i else 0 for j in range(fqm.ngens)))
        fw = [sum(Fraction(f[a][b]) * w[b] for b in range(fi.rank)) for a in range(fi.rank)]
        cols.append(list(fqm.coords_of(fw)))
    mat = im.transpose(cols)
    act = DiscriminantAction(fqm, mat)
    for i in range(fqm.ngens):
        ei = tuple(1 if j == i else 0 for j in range(fqm.ngens))
        if fqm.quadratic(act.apply(ei)) != fqm.quadratic(ei):
            raise IsometryError("induced action does not preserve q_L")
        for j in range(fqm.ngens):
            ej = tuple(1 if t == j else 0 for t in range(fqm.ngens))
            if fqm.bilinear(act.apply(ei), act.apply(ej)) != fqm.bilinear(ei, ej):
                raise IsometryError("induced action does not preserve b_L")
    return act


ORDER_SEARCH_CAP = 10 ** 6


def order_on_subgroup(act: DiscriminantAction, subgroup_gens) -> int:
    """Multiplicative order of the induced map on the subgroup generated by
    the given coordinate tuples; raises if a generator set is not invariant."""
    gens = [act.fqm.reduce(g) for g in subgroup_gens]
    if not gens or all(g == act.fqm.zero() for g in gens):
        return 1
    # invariance check: each image must lie in the subgroup (solve over Z/d)
    for g in gens:
        if not _in_span(act.fqm, gens, act.apply(g)):
            raise IsometryError("subgroup is not invariant under the action")
    current = [act.apply(g) for g in gens]
    n = 1
    while n <= ORDER_SEARCH_CAP:
        if current == gens:
            return n
        current = [act.apply(c) for c in current]
        n += 1
    raise IsometryError("order search exceeded cap")


def _in_span(fqm: FiniteQuadraticModule, gens, target) -> bool:
    """Membership of target in the subgroup generated by gens (brute small)."""
    seen = {fqm.zero()}
    frontier = [fqm.zero()]
    while frontier:
        cur = frontier.pop()
        for g in gens:
            nxt = fqm.reduce(tuple(a + b for a, b in zip(cur, g)))
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
                if len(seen) > 10 ** 5:
                    raise IsometryError("subgroup too large for membership scan")
    return tuple(target) in seen


def p_times_subgroup(fqm: FiniteQuadraticModule, p: int) -> list:
    """Generators (coordinates) of p*A inside A."""
    gens = []
    for i in range(fqm.ngens):
        g = [0] * fqm.ngens
        g[i] = p % fqm.orders[i]
        gens.append(tuple(g))
    return gens


def feasible_primes(s: SalemPoly, budget: int | None = None) -> set[int]:
    """Primes dividing res(s, c_k) for some cyclotomic c_k with
    phi(k) <= budget (default 22 - deg s)."""
    if budget is None:
        budget = 22 - s.degree
    if budget < 0:
        raise IsometryError("budget must be nonnegative")
    out: set[int] = set()
    for k in cyclotomic_indices_within(budget):
        r = ip.resultant(s.poly, ip.cyclotomic_poly(k))
        if r == 0:
            raise IsometryError("Salem polynomial shares a cyclotomic factor")
        if abs(r) > 1:
            out |= intfactor.prime_support(r)
    return out


def cyclotomic_indices_within(budget: int) -> list[int]:
    """All k with phi(k) <= budget (finite: phi(k) > sqrt(k)/2)."""
    if budget <= 0:
        return []
    ks = []
    k = 1
    while True:
        if ip.euler_phi(k) <= budget:
            ks.append(k)
        k += 1
        if k > 2 * budget * budget + 2:
            break
    return ks


def has_cyclotomic_factor_mod(s_poly: list, p: int, budget: int) -> bool:
    """Cross-check criterion: the reduction of s mod p shares a factor with
    some c_k of degree <= budget."""
    sp = fp.fp_from_int(s_poly, p)
    for k in cyclotomic_indices_within(budget):
        ck = fp.fp_from_int(ip.cyclotomic_poly(k), p)
        if len(ck) <= 1:
            continue
        if len(fp.fp_gcd(sp, ck, p)) > 1:
            return True
    return False


def min_rank_for_order(n: int) -> int:
    """Minimal rank of a free abelian group admitting an automorphism of
    order n: 0 for n=1, 1 for n=2, the phi-sum over prime powers otherwise,
    with n = 2 mod 4 reducing to n/2."""
    if n < 1:
        raise ValueError("order must be positive")
    if n == 1:
        return 0
    if n == 2:
        return 1
    if n % 4 == 2:
        return min_rank_for_order(n // 2)
    return sum(ip.euler_phi(p ** e) for p, e in intfactor.factor_integer(n).items())


# Reason codes for the realizability filter
FEAS_DET = "FEAS_DET"
ORDER_D = "ORDER_D"
MU_CYCLO = "MU_CYCLO"
P_PART_SPLIT = "P_PART_SPLIT"


@dataclass
class FilterResult:
    passed: bool
    reasons: list[str]
    order_on_p_subgroup: int | None = None
    mu_choice: list[int] | None = None

    def __bool__(self):
        return self.passed


def realizability_filter(s_part: LatticeIsometry, s: SalemPoly, p: int,
                         feasible: set[int] | None = None) -> FilterResult:
    """Necessary conditions for a hyperbolic Salem factor (S, f|S) to extend
    to a supersingular K3 lattice in characteristic p.

    Checks, with stable reason codes on failure:
      FEAS_DET     det S divisible only by feasible primes and p;
      ORDER_D      order n of the action on p*A_S has min rank <= 22 - d;
      MU_CYCLO     some product of distinct cyclotomics of degree <= 22 - d
                   annihilates the action on p*A_S;
      P_PART_SPLIT the p-primary part, if nontrivial, has irreducible
                   characteristic polynomial when p is not feasible.
    """
    chi, _, _ = char_min_poly(s_part)
    if chi != s.poly and chi != ip.scale(s.poly, -1):
        raise IsometryError("characteristic polynomial of S differs from s")
    budget = 22 - s.degree
    if feasible is None:
        feasible = feasible_primes(s)
    reasons = []
    det = abs(s_part.lattice.det())
    support = intfactor.prime_support(det) if det > 1 else set()
    if not support <= (feasible | {p}):
        reasons.append(FEAS_DET)
    act = discriminant_action(s_part)
    sub = p_times_subgroup(act.fqm, p)
    n = order_on_subgroup(act, sub)
    if min_rank_for_order(n) > budget:
        reasons.append(ORDER_D)
    mu = annihilating_cyclotomic_product(act, sub, budget)
    if mu is None:
        reasons.append(MU_CYCLO)
    if p not in feasible:
        if not _p_part_irreducible(act, p):
            reasons.append(P_PART_SPLIT)
    return FilterResult(not reasons, reasons, n, mu)


def annihilating_cyclotomic_product(act: DiscriminantAction, subgroup_gens,
                                    budget: int) -> list[int] | None:
    """Smallest-degree set of distinct k with prod c_k killing the action on
    the subgroup, of total degree <= budget; None if none exists."""
    gens = [act.fqm.reduce(g) for g in subgroup_gens]
    gens = [g for g in gens if g != act.fqm.zero()]
    if not gens:
        return []
    candidates = cyclotomic_indices_within(budget)
    # try subsets in order of total degree (budget <= 20 keeps this tiny
    # because each c_k already has degree phi(k))
    from itertools import combinations
    scored = sorted(candidates, key=lambda k: ip.euler_phi(k))
    for size in range(1, 5):
        for combo in combinations(scored, size):
            deg = sum(ip.euler_phi(k) for k in combo)
            if deg > budget:
                continue
            poly = [1]
            for k in combo:
                poly = ip.mul(poly, ip.cyclotomic_poly(k))
            if _kills_subgroup(act, gens, poly):
                return sorted(combo)
    return None


def _kills_subgroup(act: DiscriminantAction, gens, poly) -> bool:
    for g in gens:
        acc = [0] * act.fqm.ngens
        cur = tuple(g)
        for c in poly:
            if c:
                acc = [a + c * b for a, b in zip(acc, cur)]
            cur = act.apply(cur)
        if act.fqm.reduce(acc) != act.fqm.zero():
            return False
    return True


def primary_orders(fqm: FiniteQuadraticModule, q: int) -> list[int]:
    """Orders q^(v_i) of the cyclic pieces of the q-primary part."""
    out = []
    for d in fqm.orders:
        v = 0
        while d % q == 0:
            d //= q
            v += 1
        if v:
            out.append(q ** v)
    return out


def primary_generators(fqm: FiniteQuadraticModule, q: int) -> list[tuple]:
    """Generators of the q-primary part, as ambient coordinate tuples
    h_i = (d_i / q^(v_i)) e_i."""
    gens = []
    for i, d in enumerate(fqm.orders):
        dq = d
        v = 0
        while dq % q == 0:
            dq //= q
            v += 1
        if v:
            g = [0] * fqm.ngens
            g[i] = dq
            gens.append(tuple(g))
    return gens


def primary_action_matrix(act: DiscriminantAction, q: int):
    """Matrix of the action on the q-primary part in its own cyclic
    coordinates; returns (orders, matrix) with matrix entries reduced mod
    the row order."""
    fqm = act.fqm
    idx = []
    cof = []  # d_i / q^(v_i)
    ords = []
    for i, d in enumerate(fqm.orders):
        dq, v = d, 0
        while dq % q == 0:
            dq //= q
            v += 1
        if v:
            idx.append(i)
            cof.append(dq)
            ords.append(q ** v)
    n = len(idx)
    mat = [[0] * n for _ in range(n)]
    for jpos, j in enumerate(idx):
        # image of h_j = cof_j * e_j under the action, in ambient coords
        img = act.apply(tuple(cof[jpos] if t == j else 0 for t in range(fqm.ngens)))
        for ipos, i in enumerate(idx):
            # img_i * e_i = n_ij * h_i  with h_i = cof_i e_i: solve mod q^v_i
            c = img[i]
            inv = pow(cof[ipos], -1, ords[ipos])
            mat[ipos][jpos] = (c * inv) % ords[ipos]
    return ords, mat


def p_part_charpoly(act: DiscriminantAction, p: int) -> list[int] | None:
    """Characteristic polynomial over F_p of the action on the p-primary
    part, or None when that part is not p-elementary."""
    ords, mat = primary_action_matrix(act, p)
    if not ords:
        return [1]
    if any(d != p for d in ords):
        return None
    field = fp.Fq(p, (p - 1, 1))  # the prime field, modulus t - 1
    n = len(ords)
    mq = [[field.scalar(mat[i][j]) for j in range(n)] for i in range(n)]
    chi = fp.fq_charpoly(field, mq)
    return [c[0] if c else 0 for c in chi]


def _p_part_irreducible(act: DiscriminantAction, p: int) -> bool:
    """The p-primary part is trivial, or is F_p-elementary with irreducible
    characteristic polynomial of the induced action."""
    chi = p_part_charpoly(act, p)
    if chi is None:
        return False
    if chi == [1]:
        return True
    return fp.fp_is_irreducible(chi, p)
