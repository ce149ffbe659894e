"""Assembly of the full partition function from its waves.

Within a fixed residue class of s, every circulator is a constant and
every Bernoulli term a fixed polynomial, so each wave collapses to one
polynomial per residue class mod j.  Those per-residue polynomials
drive both the fast evaluator and the closed-form quasipolynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial, lcm
from typing import Dict, List, Tuple

from .bernoulli import GeneratorSet, hob_polynomial
from .circulator import prime_circulator
from .rationalpoly import RationalPolynomial, poly_eval, poly_shift
from .waves import (
    WeightVector,
    split_generators,
    wave_1_polynomial,
    weights_bruteforce,
)

__all__ = [
    "InternalConsistencyError",
    "WaveDecomposition",
    "Quasipolynomial",
    "wave_indices",
    "wave_residue_polynomials_direct",
    "wave_residue_polynomials_weighted",
    "wave_decomposition",
    "partition_count",
    "quasipolynomial",
]


class InternalConsistencyError(Exception):
    """The exact wave sum failed to be a nonnegative integer: a bug detector."""


@dataclass(frozen=True)
class WaveDecomposition:
    """Per-wave breakdown of one partition count."""

    d: GeneratorSet
    s: int
    terms: Tuple[Tuple[int, Fraction], ...]
    total: int


@dataclass(frozen=True)
class Quasipolynomial:
    """Closed form of the partition function: one polynomial per residue
    class of s modulo the period."""

    d: GeneratorSet
    period: int
    residue_polys: Tuple[RationalPolynomial, ...]

    def evaluate(self, s: int) -> Fraction:
        return poly_eval(self.residue_polys[s % self.period], s)


def wave_indices(d: GeneratorSet) -> List[int]:
    """{1} plus every j >= 2 dividing at least one generator, sorted."""
    idx = {1}
    for x in d.d:
        for j in range(2, x + 1):
            if x % j == 0:
                idx.add(j)
    return sorted(idx)


def wave_residue_polynomials_direct(j: int, d: GeneratorSet) -> Tuple[RationalPolynomial, ...]:
    """Wave j collapsed to one polynomial per residue class mod j,
    assembled from the direct r-vector sum.

    Terms sharing the same shift l = r . d_nondiv share both the
    Bernoulli argument and the circulator argument, so they are tallied
    during enumeration; the sum itself is unchanged.
    """
    ms = split_generators(j, d)
    if j < 2 or not ms.divisible:
        raise ValueError(f"j={j} is not a wave index of {d!r}")
    m = d.m
    bpoly = hob_polynomial(m - 1, ms.combined)
    nd = ms.nondivisible
    tally: Dict[int, int] = {}
    for r in product(range(j), repeat=len(nd)):
        l = sum(ri * di for ri, di in zip(r, nd))
        tally[l] = tally.get(l, 0) + 1
    shifted = {l: poly_shift(bpoly, d.s_m + l) for l in tally}
    pref = Fraction(1, j ** (m - ms.k_j) * factorial(m - 1) * d.pi_m)
    polys = []
    for c in range(j):
        acc = RationalPolynomial()
        for l, n_l in tally.items():
            psi = prime_circulator(j, c + d.s_m + l)
            if psi:
                acc = acc + (n_l * psi) * shifted[l]
        polys.append(acc * pref)
    return tuple(polys)


def wave_residue_polynomials_weighted(
    j: int, d: GeneratorSet, w: WeightVector
) -> Tuple[RationalPolynomial, ...]:
    """Wave j collapsed to per-residue polynomials via the weighted form."""
    if w.j != j or w.d != d:
        raise ValueError("weight vector was computed for a different (j, d)")
    ms = split_generators(j, d)
    w1 = wave_1_polynomial(ms.combined)
    shifted = [poly_shift(w1, -l) if a_l else None for l, a_l in enumerate(w.weights)]
    polys = []
    for c in range(j):
        acc = RationalPolynomial()
        for l, a_l in enumerate(w.weights):
            if a_l:
                psi = prime_circulator(j, c - l)
                if psi:
                    acc = acc + (a_l * psi) * shifted[l]
        polys.append(acc)
    return tuple(polys)


@lru_cache(maxsize=None)
def _engine_polys(d: GeneratorSet) -> Dict[int, Tuple[RationalPolynomial, ...]]:
    """Per-residue polynomial form of every wave of d, cached.

    Wave 1 is its single polynomial; waves j >= 2 use the weighted form
    with enumeration weights (no dependence on the DP oracle).
    """
    polys: Dict[int, Tuple[RationalPolynomial, ...]] = {
        1: (wave_1_polynomial(d),)
    }
    for j in wave_indices(d):
        if j >= 2:
            w = weights_bruteforce(j, d)
            polys[j] = wave_residue_polynomials_weighted(j, d, w)
    return polys


def wave_decomposition(d: GeneratorSet, s: int) -> WaveDecomposition:
    """All waves of d evaluated at s, plus their integer total."""
    if s < 0:
        raise ValueError("partition counts are defined for s >= 0")
    polys = _engine_polys(d)
    terms = []
    total = Fraction(0)
    for j in sorted(polys):
        value = poly_eval(polys[j][s % j], s)
        terms.append((j, value))
        total += value
    if total.denominator != 1 or total < 0:
        raise InternalConsistencyError(
            f"wave sum {total} at s={s}, d={d!r} is not a nonnegative integer"
        )
    return WaveDecomposition(d=d, s=s, terms=tuple(terms), total=int(total))


def partition_count(d: GeneratorSet, s: int) -> int:
    """W(s, d): the number of partitions of s into the generators of d."""
    return wave_decomposition(d, s).total


def quasipolynomial(d: GeneratorSet) -> Quasipolynomial:
    """Closed form of W(s, d) with period lcm(d)."""
    period = lcm(*d.d)
    polys = _engine_polys(d)
    residue_polys = []
    for c in range(period):
        acc = RationalPolynomial()
        for j, per_residue in polys.items():
            acc = acc + per_residue[c % j]
        residue_polys.append(acc)
    return Quasipolynomial(d=d, period=period, residue_polys=tuple(residue_polys))
