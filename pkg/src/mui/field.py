"""Exact arithmetic in the prime field F_p and binomial coefficients mod p."""

from __future__ import annotations

import math
from functools import lru_cache


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def normalize(a: int, p: int) -> int:
    """Canonical residue in [0, p)."""
    return a % p


def add(a: int, b: int, p: int) -> int:
    return (a + b) % p


def mul(a: int, b: int, p: int) -> int:
    return (a * b) % p


def neg(a: int, p: int) -> int:
    return (-a) % p


def inv(a: int, p: int) -> int:
    """Multiplicative inverse mod p; zero has none."""
    if a % p == 0:
        raise ZeroDivisionError(f"inverse of zero in F_{p}")
    return pow(a, -1, p)


@lru_cache(maxsize=None)
def binomial_mod(m: int, k: int, p: int) -> int:
    """C(m, k) mod p, computed digit by digit in base p (Lucas).

    Returns 0 whenever k > m: some base-p digit of k then exceeds the
    matching digit of m.
    """
    if k < 0 or m < 0:
        return 0
    result = 1
    while m or k:
        mi, m = m % p, m // p
        ki, k = k % p, k // p
        if ki > mi:
            return 0
        result = result * (math.comb(mi, ki) % p) % p
    return result
