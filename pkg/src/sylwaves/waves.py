"""Sylvester waves and their integer weights.

The partition function splits into a polynomial wave (period 1) plus
quasiperiodic waves, one per divisor j >= 2 of the generators.  Each
wave j admits two equivalent forms: a direct sum over bounded integer
vectors r, and a weighted sum over the scalar shift l = r . d with
nonnegative integer weights A_l.  The weights in turn are signed sums
of scalar partition counts over the generators not divisible by j,
which is the recursion this package exists to expose.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Callable, Optional, Tuple

from .bernoulli import GeneratorSet, hob_polynomial
from .circulator import prime_circulator
from .rationalpoly import RationalPolynomial, poly_eval, poly_shift

__all__ = [
    "ModifiedSet",
    "WeightVector",
    "split_generators",
    "wave_1",
    "wave_1_polynomial",
    "wave_j_direct",
    "weights_bruteforce",
    "weights_recursive",
    "wave_j_weighted",
]


@dataclass(frozen=True)
class ModifiedSet:
    """Split of a generator set by divisibility by j.

    ``combined`` keeps the generators divisible by j as-is and
    multiplies the rest by j; it is the set the wave-j Bernoulli
    polynomials are taken over.
    """

    j: int
    divisible: Tuple[int, ...]
    nondivisible: Tuple[int, ...]
    combined: GeneratorSet

    @property
    def k_j(self) -> int:
        return len(self.divisible)


@dataclass(frozen=True)
class WeightVector:
    """Integer weights A_0..A_{l_max} for a (j, generator set) pair."""

    j: int
    d: GeneratorSet
    l_max: int
    weights: Tuple[int, ...]


def split_generators(j: int, d: GeneratorSet) -> ModifiedSet:
    """Partition d by divisibility by j, preserving order within parts."""
    if j < 1:
        raise ValueError("j must be >= 1")
    divisible = tuple(x for x in d.d if x % j == 0)
    nondivisible = tuple(x for x in d.d if x % j != 0)
    combined = GeneratorSet(divisible + tuple(j * x for x in nondivisible))
    return ModifiedSet(j=j, divisible=divisible, nondivisible=nondivisible,
                       combined=combined)


@lru_cache(maxsize=None)
def wave_1_polynomial(d: GeneratorSet) -> RationalPolynomial:
    """The polynomial wave as a polynomial in s:
    B^(m)_{m-1}(s + s_m, d) / ((m-1)! pi_m)."""
    m = d.m
    shifted = poly_shift(hob_polynomial(m - 1, d), d.s_m)
    return shifted * Fraction(1, factorial(m - 1) * d.pi_m)


def wave_1(d: GeneratorSet, s: int) -> Fraction:
    """Polynomial part of the partition function at integer s."""
    return poly_eval(wave_1_polynomial(d), s)


def _require_wave_index(j: int, d: GeneratorSet) -> ModifiedSet:
    if j < 2:
        raise ValueError("quasiperiodic waves require j >= 2")
    ms = split_generators(j, d)
    if not ms.divisible:
        raise ValueError(f"j={j} divides no generator of {d!r}")
    return ms


def wave_j_direct(j: int, d: GeneratorSet, s: int) -> Fraction:
    """Wave j by the direct sum over r in [0, j-1]^(m - k_j).

    Each term evaluates the higher-order Bernoulli polynomial of the
    modified set at s + s_m + r . d_nondiv, times the circulator at the
    same argument.  When every generator is divisible by j the r-sum is
    the single empty term.
    """
    ms = _require_wave_index(j, d)
    m = d.m
    bpoly = hob_polynomial(m - 1, ms.combined)
    total = Fraction(0)
    for r in product(range(j), repeat=len(ms.nondivisible)):
        arg = s + d.s_m + sum(ri * di for ri, di in zip(r, ms.nondivisible))
        psi = prime_circulator(j, arg)
        if psi:
            total += poly_eval(bpoly, arg) * psi
    return total / (j ** (m - ms.k_j) * factorial(m - 1) * d.pi_m)


def weights_bruteforce(j: int, d: GeneratorSet) -> WeightVector:
    """Weights A_l by exhaustive enumeration of the r vectors.

    A_l counts the vectors r in [0, j-1]^(m-k_j) with r . d_nondiv = l.
    With no nondivisible generators the vector is trivially [1].
    """
    if j < 2:
        raise ValueError("weights require j >= 2")
    ms = split_generators(j, d)
    nd = ms.nondivisible
    if not nd:
        return WeightVector(j=j, d=d, l_max=0, weights=(1,))
    l_max = (j - 1) * sum(nd)
    tally = [0] * (l_max + 1)
    for r in product(range(j), repeat=len(nd)):
        tally[sum(ri * di for ri, di in zip(r, nd))] += 1
    return WeightVector(j=j, d=d, l_max=l_max, weights=tuple(tally))


def _parity_sign(bit_count: int) -> int:
    # Isolated so a deliberately corrupted build can be simulated in tests.
    return -1 if bit_count & 1 else 1


def weights_recursive(
    j: int,
    d: GeneratorSet,
    scalar_counter: Optional[Callable[[GeneratorSet, int], int]] = None,
) -> WeightVector:
    """Weights A_l as signed sums of scalar partition counts.

    A_l = sum over subsets v of the nondivisible generators of
    (-1)^|v| W(l - j * (v . d_nondiv), d_nondiv), with W(s) = 0 for
    s < 0 and W(0) = 1.  The scalar counts default to the independent
    dynamic-programming counter; pass ``scalar_counter`` to route them
    through the wave engine instead (the fully recursive variant).
    """
    if j < 2:
        raise ValueError("weights require j >= 2")
    ms = split_generators(j, d)
    nd = ms.nondivisible
    if not nd:
        return WeightVector(j=j, d=d, l_max=0, weights=(1,))
    q = len(nd)
    l_max = (j - 1) * sum(nd)
    sub = GeneratorSet(nd)

    if scalar_counter is None:
        from .oracle import partition_counts_upto

        table = partition_counts_upto(sub, l_max)
        count = lambda s: table[s]
    else:
        count = lambda s: scalar_counter(sub, s)

    # Per subset: its parity sign and j * (v . d_nondiv).
    terms = []
    for p in range(1 << q):
        dot = sum(nd[i] for i in range(q) if p >> i & 1)
        terms.append((_parity_sign(p.bit_count()), j * dot))

    weights = []
    for l in range(l_max + 1):
        acc = 0
        for sign, shift in terms:
            s_p = l - shift
            if s_p >= 0:
                acc += sign * count(s_p)
        weights.append(acc)
    return WeightVector(j=j, d=d, l_max=l_max, weights=tuple(weights))


def wave_j_weighted(j: int, d: GeneratorSet, s: int, w: WeightVector) -> Fraction:
    """Wave j as the weighted sum over shifts l.

    Sums A_l * W_1(s - l, modified set) * Psi_j(s - l); the polynomial
    wave here is the one of the modified set, with its own sum and
    product of generators.
    """
    if w.j != j or w.d != d:
        raise ValueError("weight vector was computed for a different (j, d)")
    if j < 2:
        raise ValueError("quasiperiodic waves require j >= 2")
    ms = split_generators(j, d)
    w1 = wave_1_polynomial(ms.combined)
    total = Fraction(0)
    for l, a_l in enumerate(w.weights):
        if a_l:
            psi = prime_circulator(j, s - l)
            if psi:
                total += a_l * psi * poly_eval(w1, s - l)
    return total
