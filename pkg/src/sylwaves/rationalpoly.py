"""Exact rational polynomials and truncated formal power series.

Everything here is immutable and computed with `fractions.Fraction`,
so no rounding ever occurs.  Degrees stay small (at most one less than
the number of generators), hence the dense representation.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Union

Rational = Fraction
RationalLike = Union[Fraction, int]

__all__ = [
    "Rational",
    "RationalPolynomial",
    "TruncatedSeries",
    "poly_eval",
    "poly_shift",
    "series_mul",
]


class RationalPolynomial:
    """Dense univariate polynomial with exact rational coefficients.

    Coefficients are stored lowest degree first, trailing zeros trimmed.
    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("RationalPolynomial", self.coeffs))

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RationalPolynomial(out)

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial([-c for c in self.coeffs])

    def __sub__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "RationalPolynomial":
        if isinstance(other, RationalPolynomial):
            if not self.coeffs or not other.coeffs:
                return RationalPolynomial()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        out[i + j] += a * b
            return RationalPolynomial(out)
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial([c * other for c in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"RationalPolynomial({[str(c) for c in self.coeffs]})"


class TruncatedSeries:
    """Formal power series truncated at an explicit order.

    Holds exactly ``order + 1`` rational coefficients (powers of t from
    0 to ``order``); the truncation order is never implicit.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike], order: int):
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > order + 1:
            raise ValueError(
                f"got {len(cs)} coefficients for truncation order {order}"
            )
        cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("TruncatedSeries", self.coeffs))

    def __repr__(self) -> str:
        return f"TruncatedSeries({[str(c) for c in self.coeffs]}, order={self.order})"


def poly_eval(p: RationalPolynomial, x: RationalLike) -> Fraction:
    """Evaluate p at x exactly (Horner)."""
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_shift(p: RationalPolynomial, a: RationalLike) -> RationalPolynomial:
    """Return q with q(x) = p(x + a), by binomial expansion."""
    a = Fraction(a)
    n = len(p.coeffs)
    if n == 0 or a == 0:
        return p
    out = [Fraction(0)] * n
    apow = [Fraction(1)]
    for _ in range(n - 1):
        apow.append(apow[-1] * a)
    for i, c in enumerate(p.coeffs):
        if c:
            for k in range(i + 1):
                out[k] += c * comb(i, k) * apow[i - k]
    return RationalPolynomial(out)


def series_mul(a: TruncatedSeries, b: TruncatedSeries, order: int) -> TruncatedSeries:
    """Cauchy product of a and b truncated at `order`.

    Both inputs must carry at least `order + 1` coefficients.
    """
    if a.order < order or b.order < order:
        raise ValueError("inputs must be truncated at >= the requested order")
    out = [Fraction(0)] * (order + 1)
    for i, ca in enumerate(a.coeffs[: order + 1]):
        if ca:
            for j in range(order + 1 - i):
                cb = b.coeffs[j]
                if cb:
                    out[i + j] += ca * cb
    return TruncatedSeries(out, order)
