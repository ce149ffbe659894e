"""Exact Sylvester-wave engine for the restricted partition function.

Computes W(s, d) — the number of ways to write s as a nonnegative
integer combination of the generators d — as an exact sum of Sylvester
waves, exposes each wave and its recursive integer weights, and emits
the closed-form quasipolynomial.  Everything numeric is arbitrary
precision; independent brute-force oracles live in ``sylwaves.oracle``.
"""

from .bernoulli import (
    GeneratorSet,
    classical_bernoulli_numbers,
    hob_eval,
    hob_polynomial,
)
from .circulator import (
    euler_totient,
    mobius,
    prime_circulator,
    prime_circulator_complex,
)
from .oracle import (
    DiophantineSystem,
    build_system,
    count_partitions_dp,
    count_vector_partitions,
    partition_counts_upto,
)
from .partition import (
    InternalConsistencyError,
    Quasipolynomial,
    WaveDecomposition,
    partition_count,
    quasipolynomial,
    wave_decomposition,
    wave_indices,
)
from .rationalpoly import (
    RationalPolynomial,
    TruncatedSeries,
    poly_eval,
    poly_shift,
    series_mul,
)
from .waves import (
    ModifiedSet,
    WeightVector,
    split_generators,
    wave_1,
    wave_j_direct,
    wave_j_weighted,
    weights_bruteforce,
    weights_recursive,
)

__version__ = "0.1.0"

__all__ = [
    "GeneratorSet",
    "classical_bernoulli_numbers",
    "hob_polynomial",
    "hob_eval",
    "mobius",
    "euler_totient",
    "prime_circulator",
    "prime_circulator_complex",
    "RationalPolynomial",
    "TruncatedSeries",
    "poly_eval",
    "poly_shift",
    "series_mul",
    "ModifiedSet",
    "WeightVector",
    "split_generators",
    "wave_1",
    "wave_j_direct",
    "wave_j_weighted",
    "weights_bruteforce",
    "weights_recursive",
    "InternalConsistencyError",
    "WaveDecomposition",
    "Quasipolynomial",
    "wave_indices",
    "wave_decomposition",
    "partition_count",
    "quasipolynomial",
    "DiophantineSystem",
    "count_partitions_dp",
    "partition_counts_upto",
    "build_system",
    "count_vector_partitions",
]
