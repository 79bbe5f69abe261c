"""Integer factorization: trial division, Brent's rho, deterministic
Miller-Rabin certification for the 64-bit range this toolkit needs."""

from __future__ import annotations

from math import gcd

MAX_FACTOR_INPUT = 2 ** 64

# Deterministic witness set, valid for all n < 3.3e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24 (covers the 64-bit range)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = (x * x) % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int) -> int:
    """One nontrivial factor of composite odd n."""
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = 2
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to split {n}")


def factor_integer(n: int) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent}.

    Inputs with |n| >= 2**64 are rejected: every resultant and determinant
    this toolkit factors fits below that bound, and staying under it keeps
    the primality certification deterministic.
    """
    if n == 0:
        raise ValueError("cannot factor zero")
    n = abs(n)
    if n >= MAX_FACTOR_INPUT:
        raise OverflowError(f"refusing to factor {n} >= 2**64")
    out: dict[int, int] = {}
    for p in (2, 3, 5, 7, 11, 13):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 17
    while d * d <= n and d < 10_000:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 2
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        f = _brent_rho(m)
        stack.append(f)
        stack.append(m // f)
    return dict(sorted(out.items()))


def prime_support(n: int) -> set[int]:
    return set(factor_integer(n))
