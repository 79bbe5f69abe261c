"""Positivity of isometries of hyperbolic and negative-definite even
lattices: cyclic roots, the linear moment-state test, and the quadratic
test that decides the remaining cases.

The states psi are recorded by their integer moments (psi(a^j))_{j<r},
a = f + f^(-1), which makes the state space a genuine integer lattice:
psi(p_i) = N(tau_i) / R'(tau_i) where R is the squarefree radical of the
characteristic polynomial of a, tau_1 > ... > tau_r its roots and
N = sum_k q_k(tau) m_k collects the moments against the synthetic-division
coefficients of R(y)/(y - tau).  Every decision is an exact sign query on
integer polynomials at real algebraic points.  Feasible states satisfy
sum_i psi(p_i)^2 <= psi(1)^2, i.e. they lie in the exact rational ellipsoid
m^T (V V^T)^(-1) m <= psi(1)^2 whose Gram matrix is the Hankel matrix of
the power sums of R; enumeration is plain Fincke-Pohst.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import intmatrix as im
from .exact import intpoly as ip
from .exact import realalg as ra
from .isometry import (IsometryError, LatticeIsometry, char_min_poly,
                       cyclotomic_multiplicities, poly_at_matrix,
                       _saturated_kernel_pair)
from .lattice import (IntLattice, LatticeError, enumerate_quadratic,
                      is_negative_definite, short_vectors, signature)


class PositivityError(ValueError):
    pass


POSITIVE = "POSITIVE"
NOT_POSITIVE = "NOT_POSITIVE"


@dataclass
class PositivityVerdict:
    status: str
    certificate: dict = field(default_factory=dict)
    mu: int | None = None
    quadratic_used: bool = False

    def __bool__(self):
        return self.status == POSITIVE


# ---------------------------------------------------------------------------
# Cyclic roots
# ---------------------------------------------------------------------------

def cyclic_roots(fi: LatticeIsometry) -> list[dict]:
    """Roots delta with a vanishing partial orbit sum, with the smallest
    vanishing index as certificate.

    The search space is the saturated kernel of the reduced cyclotomic part
    coprime to (x - 1); it must be negative definite."""
    chi, _, _ = char_min_poly(fi)
    mults, _rest = cyclotomic_multiplicities(chi)
    torsion_ks = sorted(k for k in mults if k > 1)
    if not torsion_ks:
        return []
    reduced = [1]
    for k in torsion_ks:
        reduced = ip.mul(reduced, ip.cyclotomic_poly(k))
    sub, basis = _saturated_kernel_pair(fi, reduced)
    if not is_negative_definite(sub.lattice):
        raise PositivityError("cyclic-root search space is not negative definite")
    order = 1
    for k in torsion_ks:
        from math import lcm
        order = lcm(order, k)
    out = []
    f = fi.matrix_rows()
    for delta_sub in short_vectors(sub.lattice, -2):
        delta = [sum(basis[t][i] * delta_sub[t] for t in range(len(basis)))
                 for i in range(fi.rank)]
        acc = list(delta)
        cur = list(delta)
        for i in range(1, order + 1):
            cur = im.matvec(f, cur)
            acc = [x + y for x, y in zip(acc, cur)]
            if not any(acc):
                out.append({"root": delta, "orbit_sum_length": i})
                break
    return out


# ---------------------------------------------------------------------------
# Trace data and moment states
# ---------------------------------------------------------------------------

@dataclass
class TraceData:
    a_matrix: list                 # integer matrix of a = f + f^(-1)
    radical: list                  # R(y), squarefree
    taus: list[ra.RealAlgebraic]   # descending real roots of R
    hankel: list                   # power-sum Hankel matrix of R

    @property
    def r(self) -> int:
        return len(self.taus)


def trace_eigen_data(fi: LatticeIsometry) -> TraceData:
    """Radical R of charpoly(f + f^(-1)) with its ordered real roots."""
    f = fi.matrix_rows()
    a = im.mat_add(f, fi.inverse_matrix())
    chi_a = im.charpoly(a)
    radical = ip.square_free_part(chi_a)
    if any(x != 0 for row in poly_at_matrix(radical, a) for x in row):
        raise PositivityError("isometry is not semisimple: radical does not annihilate a")
    taus = ra.isolate_real_roots(radical)
    if len(taus) != ip.degree(radical):
        raise PositivityError("trace matrix has non-real eigenvalues")
    r = len(taus)
    ps = ip.power_sums(radical, 2 * r)
    hankel = [[ps[i + j] for j in range(r)] for i in range(r)]
    return TraceData(a, radical, taus, hankel)


def moment_vector(td: TraceData, gram: list, x: list) -> tuple:
    """Moments (<a^j x, x>)_{j < r} of the pure state of x."""
    out = []
    cur = list(x)
    for _ in range(td.r):
        out.append(sum(x[i] * sum(gram[i][j] * cur[j] for j in range(len(x)))
                       for i in range(len(x))))
        cur = im.matvec(td.a_matrix, cur)
    return tuple(out)


def moment_lattice(fi: LatticeIsometry, td: TraceData) -> list:
    """HNF row basis of the lattice of mixed states inside Z^r, generated by
    the moment vectors of e_i and e_i + e_j."""
    g = fi.lattice.gram_rows()
    n = fi.rank
    rows = []
    for i in range(n):
        e = [1 if t == i else 0 for t in range(n)]
        rows.append(list(moment_vector(td, g, e)))
    for i in range(n):
        for j in range(i + 1, n):
            e = [(1 if t == i else 0) + (1 if t == j else 0) for t in range(n)]
            rows.append(list(moment_vector(td, g, e)))
    basis = im.hnf_rows(rows)
    for row in basis:
        if row[0] % 2:
            raise PositivityError("moment lattice contains a state with odd psi(1)")
    return basis


def _division_coefficients(radical: list) -> list[list]:
    """q_k(tau) with R(y)/(y - tau) = sum_k q_k(tau) y^k, as integer
    polynomials in tau; q_(r-1) = 1 and q_(k-1) = R_k + tau q_k."""
    r = ip.degree(radical)
    coeffs = [None] * r
    coeffs[r - 1] = [1]
    for k in range(r - 1, 0, -1):
        coeffs[k - 1] = ip.add([radical[k]], ip.shift(coeffs[k], 1))
    return coeffs


def state_numerator(td: TraceData, moments) -> list:
    """N(tau) with psi(p_i) = N(tau_i) / R'(tau_i)."""
    qs = _division_coefficients(td.radical)
    acc: list = []
    for k, m in enumerate(moments):
        if m:
            acc = ip.add(acc, ip.scale(qs[k], m))
    return acc


def _deriv_signs(td: TraceData) -> list[int]:
    if not hasattr(td, "_dsigns"):
        deriv = ip.derivative(td.radical)
        td._dsigns = [ra.sign_of_poly_at(deriv, tau) for tau in td.taus]
    return td._dsigns


def state_projection_signs(td: TraceData, moments) -> list[int]:
    """Exact signs of psi(p_i) = N(tau_i)/R'(tau_i), descending order.

    Zero values are detected through one gcd with the radical; nonzero
    signs by rational interval evaluation with on-demand refinement."""
    num = state_numerator(td, moments)
    if not num:
        return [0] * td.r
    dsigns = _deriv_signs(td)
    g = ip.gcd_int(num, td.radical)
    gchain = ra.sturm_chain(g) if ip.degree(g) >= 1 else None
    out = []
    for tau, sd in zip(td.taus, dsigns):
        if gchain is not None and ra.count_roots_in(gchain, tau.lo, tau.hi) > 0:
            out.append(0)
            continue
        while True:
            mn, mx = _interval_eval_poly(num, tau.lo, tau.hi)
            if mn > 0:
                out.append(sd)
                break
            if mx < 0:
                out.append(-sd)
                break
            tau.refine()
    return out


CERTIFIED_POSITIVE = "CERTIFIED_POSITIVE"
INCONCLUSIVE = "INCONCLUSIVE"


@dataclass
class LinearTestResult:
    status: str
    mu: int | None
    optimal_states: list[tuple]    # moment vectors with psi(1) = -2

    def __bool__(self):
        return self.status == CERTIFIED_POSITIVE


def _state_search_data(td: TraceData, basis: list):
    """Slice-enumeration data for the state lattice.

    The adjugate of the Hankel matrix gives an integer form for the
    feasibility ellipsoid; the HNF basis splits into a pivot row carrying
    psi(1) and an LLL-reduced basis of the psi(1) = 0 sublattice, so each
    level is enumerated inside the slice (the minimal enclosing ball of the
    feasible simplex)."""
    det_h = im.det_bareiss(td.hankel)
    hinv = im.inverse_rational(td.hankel)
    adj = [[int(x * det_h) for x in row] for row in hinv]
    pivot = basis[0]
    if any(row[0] for row in basis[1:]):
        raise PositivityError("state basis is not in HNF")
    red = im.lll_reduce(basis[1:], form=adj) if len(basis) > 1 else []
    gram = im.matmul(im.matmul(red, adj), im.transpose(red)) if red else []
    return det_h, adj, pivot, red, gram


def _states_at_level(td: TraceData, search, level: int) -> list[tuple]:
    """All moment vectors in the state lattice with psi(1) = level,
    psi(p_1) < 0 and psi(p_i) <= 0; level is a negative even integer.

    Feasible states lie in the ellipsoid m^T H^(-1) m <= level^2, and the
    enumeration runs in the affine slice psi(1) = level."""
    det_h, adj, pivot, red, gram = search
    if level % pivot[0]:
        return []
    mstar = [x * (level // pivot[0]) for x in pivot]
    bound_total = level * level * det_h
    out = []
    if not red:
        q0 = sum(mstar[i] * adj[i][j] * mstar[j]
                 for i in range(td.r) for j in range(td.r))
        cands = [()] if q0 <= bound_total else []
    else:
        amstar = im.matvec(adj, mstar)
        v = [sum(row[j] * amstar[j] for j in range(td.r)) for row in red]
        c0 = sum(mstar[j] * amstar[j] for j in range(td.r))
        n0 = im.solve_rational(gram, [-x for x in v])
        const = c0 + sum(Fraction(vi) * ni for vi, ni in zip(v, n0))
        bound = Fraction(bound_total) - const
        if bound < 0:
            return []
        cands = enumerate_quadratic(gram, bound, center=n0)
    for coeffs in cands:
        m = tuple(ms + sum(c * red[t][j] for t, c in enumerate(coeffs))
                  for j, ms in enumerate(mstar))
        assert m[0] == level
        signs = state_projection_signs(td, m)
        if signs[0] < 0 and all(s <= 0 for s in signs[1:]):
            out.append(m)
    return sorted(set(out))


def linear_positivity_test(fi: LatticeIsometry, td: TraceData, basis: list,
                           floor: int = -12) -> LinearTestResult:
    """Exact version of the linear moment test: mu is the largest even value
    of psi(1) over feasible states.  CERTIFIED_POSITIVE when mu < -2 (or no
    feasible state above the floor); INCONCLUSIVE returns all optimal
    states with psi(1) = -2."""
    if signature(fi.lattice)[0] != 1:
        raise PositivityError("linear test requires a hyperbolic lattice")
    search = _state_search_data(td, basis)
    states = _states_at_level(td, search, -2)
    if states:
        return LinearTestResult(INCONCLUSIVE, -2, states)
    level = -4
    while level >= floor:
        states = _states_at_level(td, search, level)
        if states:
            return LinearTestResult(CERTIFIED_POSITIVE, level, [])
        level -= 2
    return LinearTestResult(CERTIFIED_POSITIVE, None, [])


# ---------------------------------------------------------------------------
# Quadratic test
# ---------------------------------------------------------------------------

def _tau_poly_vector(td: TraceData, fi: LatticeIsometry, v: list) -> list[list]:
    """Components of Q_1(a) v as integer polynomials in tau."""
    qs = _division_coefficients(td.radical)
    n = fi.rank
    out = [[] for _ in range(n)]
    cur = list(v)
    for k in range(td.r):
        for i in range(n):
            out[i] = ip.add(out[i], ip.scale(qs[k], cur[i]))
        cur = im.matvec(td.a_matrix, cur)
    return out


def _tau_inner(gram, u, w, radical) -> list:
    """<u, w> for tau-polynomial vectors, reduced modulo the radical."""
    acc: list = []
    n = len(u)
    for i in range(n):
        if not u[i]:
            continue
        for j in range(n):
            if gram[i][j] and w[j]:
                acc = ip.add(acc, ip.scale(ip.mul(u[i], w[j]), gram[i][j]))
    q, r = ip.divmod_rational(acc, radical)
    return ip.trim([int(c) for c in r])


def choose_reference_vector(fi: LatticeIsometry, td: TraceData):
    """Deterministic y = Q_1(a) v with y^2 > 0: first standard basis vector
    that works, then sums of two."""
    n = fi.rank
    candidates = [[1 if t == i else 0 for t in range(n)] for i in range(n)]
    candidates += [[(1 if t == i else 0) + (1 if t == j else 0) for t in range(n)]
                   for i in range(n) for j in range(i + 1, n)]
    g = fi.lattice.gram_rows()
    for v in candidates:
        y = _tau_poly_vector(td, fi, v)
        y2 = _tau_inner(g, y, y, td.radical)
        if ra.sign_of_poly_at(y2, td.taus[0]) > 0:
            return v, y
    raise PositivityError("no reference vector with positive square found")


def _interval_eval_poly(poly, lo: Fraction, hi: Fraction):
    if not poly:
        return Fraction(0), Fraction(0)
    mn = Fraction(poly[-1])
    mx = Fraction(poly[-1])
    for c in reversed(poly[:-1]):
        cands = (mn * lo, mn * hi, mx * lo, mx * hi)
        mn, mx = min(cands) + c, max(cands) + c
    return mn, mx


@dataclass
class QuadraticOutcome:
    positive: bool
    obstructing_root: list | None = None
    state: tuple | None = None
    candidates_checked: int = 0


def quadratic_positivity_test(fi: LatticeIsometry, td: TraceData,
                              optimal_states: list[tuple],
                              y_choice: list | None = None) -> QuadraticOutcome:
    """Decide positivity given the optimal states of the linear stage.

    For each state psi the compact set B_psi (points x with moment vector
    equal to psi's, <x, y> <= 0 <= <x, f(y)>) is enclosed in an exact
    rational ellipsoid and its lattice points are filtered by exact moment
    equality and exact sign checks; any survivor is an obstructing root."""
    if not optimal_states:
        return QuadraticOutcome(True)
    n = fi.rank
    g = fi.lattice.gram_rows()
    if y_choice is None:
        _, y = choose_reference_vector(fi, td)
    else:
        y = _tau_poly_vector(td, fi, y_choice)
        if ra.sign_of_poly_at(_tau_inner(g, y, y, td.radical), td.taus[0]) <= 0:
            raise PositivityError("reference vector has nonpositive square")
    f = fi.matrix_rows()
    fy = [[c for c in _poly_combination(f, y, i)] for i in range(n)]
    tau1 = td.taus[0]
    radical = td.radical
    deriv = ip.derivative(radical)

    # tau-polynomial ingredients
    w1 = [_tau_inner_row(g, y, i, radical) for i in range(n)]       # (G y)_i
    w2 = [_tau_inner_row(g, fy, i, radical) for i in range(n)]      # (G f y)_i
    y_sq = _tau_inner(g, y, y, radical)
    yfy = _tau_inner(g, y, fy, radical)
    # directions cutting the arc: u_b in (f y)-perp, u_a in y-perp (scaled)
    ub = [_poly_sub(_poly_scale(y[i], y_sq), _poly_scale(fy[i], yfy), radical) for i in range(n)]
    ua = [_poly_sub(_poly_scale(fy[i], y_sq), _poly_scale(y[i], yfy), radical) for i in range(n)]
    ub_sq = _tau_inner(g, ub, ub, radical)
    ua_sq = _tau_inner(g, ua, ua, radical)
    ub_y = _tau_inner(g, ub, y, radical)
    ua_fy = _tau_inner(g, ua, fy, radical)
    # projection form numerator: P(tau) = sum_k q_k(tau) G a^k (matrix of tau-polys)
    qs = _division_coefficients(radical)
    proj = [[[] for _ in range(n)] for _ in range(n)]
    power = im.identity(n)
    for k in range(td.r):
        ga = im.matmul(g, power)
        for i in range(n):
            for j in range(n):
                if ga[i][j]:
                    proj[i][j] = ip.add(proj[i][j], ip.scale(qs[k], ga[i][j]))
        power = im.matmul(td.a_matrix, power)

    checked = 0
    for state in optimal_states:
        num = state_numerator(td, state)    # psi(p_1) = num(tau1)/R'(tau1)
        # rational enclosure: refine tau1 until everything is tight
        width = Fraction(1, 10 ** 6)
        while True:
            tau1.refine_below(width)
            lo, hi = tau1.lo, tau1.hi
            d_lo, d_hi = _interval_eval_poly(deriv, lo, hi)
            if d_lo <= 0:
                width /= 16
                continue
            n_lo, n_hi = _interval_eval_poly(num, lo, hi)
            psi1_lo, psi1_hi = _div_interval((n_lo, n_hi), (d_lo, d_hi))
            ubsq_iv = _interval_eval_poly(ub_sq, lo, hi)
            uasq_iv = _interval_eval_poly(ua_sq, lo, hi)
            if ubsq_iv[1] >= 0 or uasq_iv[1] >= 0:
                width /= 16
                continue
            uby_iv = _interval_eval_poly(ub_y, lo, hi)
            uafy_iv = _interval_eval_poly(ua_fy, lo, hi)
            b1sq = _mul_interval(_div_interval(_mul_interval(uby_iv, uby_iv), ubsq_iv),
                                 (psi1_lo, psi1_hi))
            b2sq = _mul_interval(_div_interval(_mul_interval(uafy_iv, uafy_iv), uasq_iv),
                                 (psi1_lo, psi1_hi))
            c_upper = b1sq[1] + b2sq[1] + 2 + psi1_hi
            # midpoint matrix (quantized to dyadics) and radius of the form
            quant = 1 << 24
            phi_mid = [[Fraction(0)] * n for _ in range(n)]
            delta = Fraction(0)
            dinv = _div_interval((Fraction(1), Fraction(1)), (d_lo, d_hi))
            for i in range(n):
                for j in range(i, n):
                    w1i = _interval_eval_poly(w1[i], lo, hi)
                    w1j = _interval_eval_poly(w1[j], lo, hi)
                    w2i = _interval_eval_poly(w2[i], lo, hi)
                    w2j = _interval_eval_poly(w2[j], lo, hi)
                    pij = _interval_eval_poly(proj[i][j], lo, hi)
                    entry = _add_interval(
                        _add_interval(_mul_interval(w1i, w1j), _mul_interval(w2i, w2j)),
                        _add_interval((Fraction(-g[i][j]), Fraction(-g[i][j])),
                                      _mul_interval(pij, dinv)))
                    mid = (entry[0] + entry[1]) / 2
                    qmid = Fraction(round(mid * quant), quant)
                    phi_mid[i][j] = phi_mid[j][i] = qmid
                    delta = max(delta, (entry[1] - entry[0]) / 2 + abs(qmid - mid))
            lam = _min_eigen_lower(phi_mid)
            if lam - n * delta <= 0:
                width /= 16
                continue
            lam_lb = lam - n * delta
            c_tilde = c_upper + delta * n * (max(c_upper, 0) / lam_lb)
            break
        # integer enumeration data: scale the dyadic matrix by the quantum
        phi_int = [[int(x * quant) for x in row] for row in phi_mid]
        bound_int = int(c_tilde * quant) + 1
        tmat = im.lll_reduce(im.identity(n), form=phi_int)
        tgram = im.matmul(im.matmul(tmat, phi_int), im.transpose(tmat))
        for z in enumerate_quadratic(tgram, bound_int):
            x = [sum(zc * tmat[t][i] for t, zc in enumerate(z)) for i in range(n)]
            checked += 1
            if moment_vector(td, g, list(x)) != tuple(state):
                continue
            s1 = ra.sign_of_poly_at(_dot_tau(w1, x), tau1)
            s2 = ra.sign_of_poly_at(_dot_tau(w2, x), tau1)
            if s1 <= 0 <= s2:
                return QuadraticOutcome(False, list(x), tuple(state), checked)
    return QuadraticOutcome(True, None, None, checked)


def _poly_combination(mat, vec_polys, i):
    acc: list = []
    for j, p in enumerate(vec_polys):
        if mat[i][j] and p:
            acc = ip.add(acc, ip.scale(p, mat[i][j]))
    return acc


def _tau_inner_row(gram, vec_polys, i, radical):
    acc: list = []
    for j, p in enumerate(vec_polys):
        if gram[i][j] and p:
            acc = ip.add(acc, ip.scale(p, gram[i][j]))
    _, r = ip.divmod_rational(acc, radical)
    return ip.trim([int(c) for c in r])


def _poly_scale(p, s):
    return ip.mul(p, s) if p and s else []


def _poly_sub(a, b, radical):
    _, r = ip.divmod_rational(ip.sub(a, b), radical)
    return ip.trim([int(c) for c in r])


def _dot_tau(w, x):
    acc: list = []
    for wi, xi in zip(w, x):
        if xi and wi:
            acc = ip.add(acc, ip.scale(wi, xi))
    return acc


def _mul_interval(a, b):
    cands = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return min(cands), max(cands)


def _add_interval(a, b):
    return a[0] + b[0], a[1] + b[1]


def _div_interval(a, b):
    if b[0] <= 0 <= b[1]:
        raise PositivityError("interval division through zero")
    inv = (1 / b[1], 1 / b[0])
    return _mul_interval(a, inv)


def _min_eigen_lower(m) -> Fraction:
    """Rational lower bound for the least eigenvalue of a symmetric rational
    matrix, by bisection on exact positive-definiteness of m - t."""
    n = len(m)
    hi = min(m[i][i] for i in range(n))
    lo = Fraction(0)
    if not _is_pd_shift(m, lo):
        return Fraction(0)
    for _ in range(24):
        midp = (lo + hi) / 2
        if _is_pd_shift(m, midp):
            lo = midp
        else:
            hi = midp
    return lo


def _is_pd_shift(m, t) -> bool:
    n = len(m)
    a = [[Fraction(m[i][j]) - (t if i == j else 0) for j in range(n)] for i in range(n)]
    for i in range(n):
        if a[i][i] <= 0:
            return False
        for j in range(i + 1, n):
            f = a[j][i] / a[i][i]
            if f:
                for k in range(i, n):
                    a[j][k] -= f * a[i][k]
    return True


# ---------------------------------------------------------------------------
# Full verdict
# ---------------------------------------------------------------------------

def is_positive(fi: LatticeIsometry, y_choice: list | None = None) -> PositivityVerdict:
    """Definitive positivity verdict with certificate.

    Negative definite lattices: positive iff there is no cyclic root.
    Hyperbolic: cyclic roots, then the linear moment test, then the
    quadratic test on its optimal states."""
    cyc = cyclic_roots(fi)
    if cyc:
        return PositivityVerdict(NOT_POSITIVE, {"cyclic": cyc[0]})
    if is_negative_definite(fi.lattice):
        return PositivityVerdict(POSITIVE, {"reason": "no cyclic roots (definite)"})
    if signature(fi.lattice)[0] != 1:
        raise PositivityError("positivity needs a hyperbolic or negative definite lattice")
    td = trace_eigen_data(fi)
    basis = moment_lattice(fi, td)
    lin = linear_positivity_test(fi, td, basis)
    if lin.status == CERTIFIED_POSITIVE:
        return PositivityVerdict(POSITIVE, {"reason": "linear test"}, lin.mu)
    quad = quadratic_positivity_test(fi, td, lin.optimal_states, y_choice)
    if quad.positive:
        return PositivityVerdict(POSITIVE,
                                 {"reason": "quadratic test",
                                  "optimal_states": lin.optimal_states},
                                 lin.mu, quadratic_used=True)
    return PositivityVerdict(NOT_POSITIVE,
                             {"obstructing_root": quad.obstructing_root,
                              "state": quad.state},
                             lin.mu, quadratic_used=True)
