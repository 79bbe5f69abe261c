from __future__ import annotations

import random

import pytest

from salemforge.exact import intfactor


def test_examples():
    assert intfactor.factor_integer(169) == {13: 2}
    assert intfactor.factor_integer(10080) == {2: 5, 3: 2, 5: 1, 7: 1}
    assert intfactor.factor_integer(-18) == {2: 1, 3: 2}


def test_roundtrip_random():
    rng = random.Random(2)
    for _ in range(200):
        n = rng.randint(2, 10 ** 12)
        fac = intfactor.factor_integer(n)
        prod = 1
        for p, e in fac.items():
            assert intfactor.is_prime(p)
            prod *= p ** e
        assert prod == n


def test_semiprime():
    p, q = 1_000_003, 999_983
    assert intfactor.factor_integer(p * q) == {q: 1, p: 1}


def test_is_prime_edges():
    assert not intfactor.is_prime(1)
    assert intfactor.is_prime(2)
    assert intfactor.is_prime(2 ** 61 - 1)
    assert not intfactor.is_prime(2 ** 61)


def test_overflow_guard():
    with pytest.raises(OverflowError):
        intfactor.factor_integer(2 ** 64)
    with pytest.raises(ValueError):
        intfactor.factor_integer(0)
