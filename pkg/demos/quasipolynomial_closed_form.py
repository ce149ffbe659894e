"""Emit the closed form of a partition count as a quasipolynomial.

Within each residue class of s modulo the period L = lcm(generators),
the count is a plain polynomial in s with rational coefficients.  The
famous tiny example: with generators {1,2},

    W(s) = s/2 + 3/4 + (-1)^s / 4,

i.e. residue polynomials s/2 + 1 and s/2 + 1/2.
"""

from sylwaves import GeneratorSet, count_partitions_dp, quasipolynomial


def show(parts):
    d = GeneratorSet(parts)
    q = quasipolynomial(d)
    print(f"generators {parts}: period L={q.period}")
    for c, p in enumerate(q.residue_polys):
        coeffs = [str(x) for x in (p.coeffs or (0,))]
        print(f"  s = {c} mod {q.period}:  coefficients (low degree first) {coeffs}")
    for s in range(3 * q.period + 1):
        assert q.evaluate(s) == count_partitions_dp(d, s)
    print(f"  checked against DP for s = 0..{3 * q.period}")
    print()


show([1, 2])
show([1, 1, 1])
show([4, 6])
