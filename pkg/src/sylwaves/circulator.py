"""Prime circulator: the sum of s-th powers of primitive j-th roots of unity.

Evaluated exactly through the Ramanujan-sum identity

    Psi_j(s) = sum_{d | gcd(j, s mod j)} mu(j / d) * d,

which is always an integer.  A complex-exponential evaluator is kept
alongside as a floating-point oracle for the defining sum.
"""

from __future__ import annotations

import cmath
from functools import lru_cache
from math import gcd
from typing import Dict, Tuple

__all__ = [
    "mobius",
    "euler_totient",
    "prime_circulator",
    "prime_circulator_complex",
]


def _factorize(n: int) -> Dict[int, int]:
    """Prime factorization by trial division; n here is always small."""
    fac: Dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            fac[p] = fac.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        fac[n] = fac.get(n, 0) + 1
    return fac


def mobius(n: int) -> int:
    """Moebius function mu(n)."""
    if n < 1:
        raise ValueError("mobius is defined for n >= 1")
    fac = _factorize(n)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def euler_totient(n: int) -> int:
    """Euler totient phi(n)."""
    if n < 1:
        raise ValueError("totient is defined for n >= 1")
    out = n
    for p in _factorize(n):
        out -= out // p
    return out


def _divisors(n: int) -> Tuple[int, ...]:
    small = []
    large = []
    k = 1
    while k * k <= n:
        if n % k == 0:
            small.append(k)
            if k != n // k:
                large.append(n // k)
        k += 1
    return tuple(small + large[::-1])


@lru_cache(maxsize=None)
def _circulator_table(j: int) -> Tuple[int, ...]:
    """Psi_j(0..j-1), precomputed once per period."""
    table = []
    for r in range(j):
        g = gcd(j, r)  # gcd(j, 0) == j
        table.append(sum(mobius(j // dv) * dv for dv in _divisors(g)))
    return tuple(table)


def prime_circulator(j: int, s: int) -> int:
    """Exact integer value of Psi_j(s); s may be negative (j-periodic)."""
    if j < 1:
        raise ValueError("period j must be >= 1")
    return _circulator_table(j)[s % j]


def prime_circulator_complex(j: int, s: int) -> complex:
    """Psi_j(s) by direct summation over primitive roots of unity.

    Floating-point oracle for the exact path; the imaginary part of the
    result is a numerical-noise indicator.
    """
    if j < 1:
        raise ValueError("period j must be >= 1")
    return sum(
        cmath.exp(2j * cmath.pi * n * s / j)
        for n in range(1, j + 1)
        if gcd(n, j) == 1
    )
