"""Higher-order Bernoulli polynomials from their generating function.

B^(m)_n(s, d) is defined by

    e^{s t} t^m (d_1 ... d_m) / prod_i (e^{d_i t} - 1)
        = sum_n B^(m)_n(s, d) t^n / n!

Each factor d_i t / (e^{d_i t} - 1) has the known expansion
sum_k B_k d_i^k t^k / k! in terms of the classical Bernoulli numbers,
so the product is formed factor by factor and convolved with e^{s t}
symbolically in s.  No power-series division is needed.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, List

from .rationalpoly import RationalPolynomial, TruncatedSeries, poly_eval, series_mul

__all__ = [
    "GeneratorSet",
    "classical_bernoulli_numbers",
    "hob_polynomial",
    "hob_eval",
]


class GeneratorSet:
    """Multiset of positive integer generators d_1..d_m.

    Caches the element sum and product, both used by every wave
    formula.  Repetitions are meaningful.
    """

    __slots__ = ("d", "s_m", "pi_m")

    def __init__(self, d: Iterable[int]):
        ds = tuple(int(x) for x in d)
        if not ds:
            raise ValueError("generator set must be nonempty")
        if any(x < 1 for x in ds):
            raise ValueError(f"generators must be positive, got {ds}")
        s = 0
        p = 1
        for x in ds:
            s += x
            p *= x
        object.__setattr__(self, "d", ds)
        object.__setattr__(self, "s_m", s)
        object.__setattr__(self, "pi_m", p)

    def __setattr__(self, name, value):
        raise AttributeError("GeneratorSet is immutable")

    @property
    def m(self) -> int:
        return len(self.d)

    def __iter__(self):
        return iter(self.d)

    def __len__(self) -> int:
        return len(self.d)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GeneratorSet):
            return NotImplemented
        return self.d == other.d

    def __hash__(self) -> int:
        return hash(("GeneratorSet", self.d))

    def __repr__(self) -> str:
        return f"GeneratorSet({list(self.d)})"


_BERNOULLI_CACHE: List[Fraction] = [Fraction(1)]


def classical_bernoulli_numbers(n_max: int) -> List[Fraction]:
    """Bernoulli numbers B_0..B_{n_max} (convention B_1 = -1/2).

    Computed by the recurrence sum_{k=0}^{n} C(n+1, k) B_k = 0.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    while len(_BERNOULLI_CACHE) <= n_max:
        n = len(_BERNOULLI_CACHE)
        acc = Fraction(0)
        for k, bk in enumerate(_BERNOULLI_CACHE):
            acc += comb(n + 1, k) * bk
        _BERNOULLI_CACHE.append(-acc / (n + 1))
    return list(_BERNOULLI_CACHE[: n_max + 1])


@lru_cache(maxsize=None)
def hob_polynomial(n: int, d: GeneratorSet) -> RationalPolynomial:
    """B^(m)_n(s, d) as a monic degree-n polynomial in s."""
    if n < 0:
        raise ValueError("n must be >= 0")
    bern = classical_bernoulli_numbers(n)
    prod = TruncatedSeries([1], n)
    for di in d.d:
        factor = TruncatedSeries(
            [bern[k] * Fraction(di**k, factorial(k)) for k in range(n + 1)], n
        )
        prod = series_mul(prod, factor, n)
    # Convolve with e^{s t}: the t^n coefficient of the full product is
    # sum_k c_k s^{n-k} / (n-k)!, and B^(m)_n multiplies it by n!.
    n_fact = factorial(n)
    coeffs = [Fraction(0)] * (n + 1)
    for k, ck in enumerate(prod.coeffs):
        if ck:
            coeffs[n - k] = ck * n_fact / factorial(n - k)
    return RationalPolynomial(coeffs)


def hob_eval(n: int, d: GeneratorSet, s) -> Fraction:
    """Exact value of B^(m)_n(s, d) at a rational point s."""
    return poly_eval(hob_polynomial(n, d), Fraction(s))
