"""Exact dense matrix routines over Z and Q.

Matrices are lists of rows; entries are Python ints (or Fractions where a
routine documents rational output).  Everything is exact; there is no
floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction

Matrix = list


def identity(n: int) -> list:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(n: int, m: int) -> list:
    return [[0] * m for _ in range(n)]


def copy(m: Matrix) -> list:
    return [row[:] for row in m]


def transpose(m: Matrix) -> list:
    return [list(col) for col in zip(*m)] if m else []


def matmul(a: Matrix, b: Matrix) -> list:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a: Matrix, v: list) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def mat_add(a: Matrix, b: Matrix) -> list:
    return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]


def mat_sub(a: Matrix, b: Matrix) -> list:
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def mat_scale(a: Matrix, c) -> list:
    return [[x * c for x in row] for row in a]


def is_symmetric(m: Matrix) -> bool:
    n = len(m)
    return all(m[i][j] == m[j][i] for i in range(n) for j in range(i))


def det_bareiss(m: Matrix) -> int:
    """Fraction-free determinant of an integer matrix."""
    a = copy(m)
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def charpoly(m: Matrix) -> list:
    """Characteristic polynomial det(xI - m), constant first, via the
    Faddeev-LeVerrier recurrence (integral throughout for integer input)."""
    n = len(m)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = identity(n)
    for k in range(1, n + 1):
        mk = matmul(m, mk)
        tr = sum(mk[i][i] for i in range(n))
        c = -tr // k
        if -tr % k:
            raise ArithmeticError("Faddeev-LeVerrier trace not divisible")
        coeffs[n - k] = c
        for i in range(n):
            mk[i][i] += c
    return coeffs


def rank(m: Matrix) -> int:
    a = [[Fraction(x) for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == rows:
            break
    return r


def solve_rational(a: Matrix, rhs: list) -> list | None:
    """Solve a*x = rhs over Q; returns None if inconsistent, raises on
    underdetermined systems with a free variable hitting the solution."""
    n = len(a)
    m = len(a[0]) if n else 0
    aug = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(a)]
    pivots = []
    r = 0
    for c in range(m):
        piv = next((i for i in range(r, n) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, n):
        if aug[i][m] != 0:
            return None
    x = [Fraction(0)] * m
    for i, c in enumerate(pivots):
        x[c] = aug[i][m]
    return x


def inverse_rational(a: Matrix) -> list:
    """Exact inverse over Q (entries Fractions); raises on singular input."""
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
           for i, row in enumerate(a)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def smith_normal_form(m: Matrix) -> tuple[list, list, list]:
    """Smith normal form: returns (S, U, V) with U*m*V = S, S diagonal with
    d1 | d2 | ..., and U, V unimodular."""
    a = copy(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, c):
        for row in a:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    t = 0
    while t < min(rows, cols):
        piv = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] != 0 and (piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    add_row(t, i, -q)
                    if a[i][t]:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    add_col(t, j, -q)
                    if a[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if not dirty and all(a[i][t] == 0 for i in range(t + 1, rows)) \
                    and all(a[t][j] == 0 for j in range(t + 1, cols)):
                break
        bad = None
        for i in range(t + 1, rows):
            if any(a[i][j] % a[t][t] for j in range(t + 1, cols)):
                bad = i
                break
        if bad is not None:
            add_row(bad, t, 1)
            continue
        t += 1
    for i in range(min(rows, cols)):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            u[i] = [-x for x in u[i]]
    return a, u, v


def hnf_rows(m: Matrix) -> list:
    """Row-style Hermite normal form (upper staircase, positive pivots,
    entries above a pivot reduced); zero rows dropped."""
    a = [row[:] for row in m if any(row)]
    if not a:
        return []
    cols = len(a[0])
    r = 0
    for c in range(cols):
        # gcd the column below r into one row
        while True:
            nz = [i for i in range(r, len(a)) if a[i][c] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(a[i][c]))
            a[r], a[i0] = a[i0], a[r]
            done = True
            for i in range(r + 1, len(a)):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    if a[i][c]:
                        done = False
            if done:
                break
        if r < len(a) and a[r][c] != 0:
            if a[r][c] < 0:
                a[r] = [-x for x in a[r]]
            for i in range(r):
                q = a[i][c] // a[r][c]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
            r += 1
            if r == len(a):
                break
    return [row for row in a[:r] if any(row)]


def kernel_basis(m: Matrix) -> list:
    """Basis (rows) of the saturated integer kernel {x : m*x = 0}."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    # Work on the transpose with a row transform: U * m^T = H.
    a = [list(col) for col in zip(*m)] if rows else [[] for _ in range(cols)]
    if not a:
        return identity(cols)
    u = identity(cols)
    r = 0
    for c in range(rows):
        while True:
            nz = [i for i in range(r, cols) if a[i][c] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(a[i][c]))
            a[r], a[i0] = a[i0], a[r]
            u[r], u[i0] = u[i0], u[r]
            done = True
            for i in range(r + 1, cols):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                    if a[i][c]:
                        done = False
            if done:
                break
        if r < cols and a[r][c] != 0:
            r += 1
            if r == cols:
                break
    return [u[i] for i in range(r, cols)]


def lll_reduce(basis: Matrix, delta: Fraction = Fraction(3, 4), form: Matrix | None = None) -> list:
    """LLL reduction of the row basis with exact rational Gram-Schmidt,
    optionally with respect to a positive definite form (default: dot)."""
    b = [row[:] for row in basis]
    n = len(b)
    if n <= 1:
        return b

    if form is None:
        def inner(u, v):
            return sum(Fraction(x) * y for x, y in zip(u, v))
    else:
        def inner(u, v):
            return sum(Fraction(u[i]) * form[i][j] * v[j]
                       for i in range(len(u)) for j in range(len(v)))

    def gram_schmidt():
        mu = [[Fraction(0)] * n for _ in range(n)]
        bstar = []
        norms = []
        for i in range(n):
            v = [Fraction(x) for x in b[i]]
            for j in range(len(bstar)):
                if norms[j] == 0:
                    mu[i][j] = Fraction(0)
                    continue
                mu[i][j] = inner(b[i], bstar[j]) / norms[j]
                v = [x - mu[i][j] * y for x, y in zip(v, bstar[j])]
            bstar.append(v)
            norms.append(inner(v, v))
        return mu, norms

    mu, norms = gram_schmidt()
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                b[k] = [x - q * y for x, y in zip(b[k], b[j])]
                mu, norms = gram_schmidt()
        if norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            mu, norms = gram_schmidt()
            k = max(k - 1, 1)
    return b
