"""Brute-force ground truth, independent of the wave machinery.

Two counters live here: the classic dynamic-programming sweep for
scalar partition counts, and an exhaustive lattice enumeration for the
bounded Diophantine system whose solution count defines the wave
weights.  Neither imports anything from the wave modules, so agreement
with them is evidence rather than circularity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np

from .bernoulli import GeneratorSet

__all__ = [
    "DiophantineSystem",
    "count_partitions_dp",
    "partition_counts_upto",
    "build_system",
    "count_vector_partitions",
]

# Per generator set, the largest DP table computed so far.  Recomputed
# at geometrically growing sizes, so repeated point queries amortize.
_DP_TABLES: Dict[Tuple[int, ...], List[int]] = {}


def _dp_table(d: GeneratorSet, s_max: int) -> List[int]:
    cached = _DP_TABLES.get(d.d)
    if cached is not None and len(cached) > s_max:
        return cached
    size = max(s_max + 1, 2 * len(cached) if cached else 128)
    table = [0] * size
    table[0] = 1
    for di in d.d:
        for t in range(di, size):
            table[t] += table[t - di]
    _DP_TABLES[d.d] = table
    return table


def count_partitions_dp(d: GeneratorSet, s: int) -> int:
    """Number of nonnegative integer solutions of d . x = s.

    Standard one-dimensional table sweep; exact big integers.  Negative
    s counts zero by convention, s = 0 counts the empty solution.
    """
    if s < 0:
        return 0
    return _dp_table(d, s)[s]


def partition_counts_upto(d: GeneratorSet, s_max: int) -> List[int]:
    """Partition counts for all s in 0..s_max in one sweep."""
    if s_max < 0:
        return []
    return _dp_table(d, s_max)[: s_max + 1]


@dataclass(frozen=True)
class DiophantineSystem:
    """Bounded system D . R = S for the weight count.

    The first row carries the generators not divisible by j followed by
    zeros; each remaining row pairs one free variable with its slack,
    turning the bound r_i <= j - 1 into an equation.
    """

    matrix: Tuple[Tuple[int, ...], ...]
    rhs: Tuple[int, ...]


def build_system(j: int, d: GeneratorSet, l: int) -> DiophantineSystem:
    """Assemble the (m - k_j + 1) x 2(m - k_j) system for weight A_l."""
    if j < 2:
        raise ValueError("j must be >= 2")
    if l < 0:
        raise ValueError("l must be >= 0")
    nd = tuple(x for x in d.d if x % j != 0)
    q = len(nd)
    if q < 1:
        raise ValueError("system requires at least one generator not divisible by j")
    rows = [nd + (0,) * q]
    for i in range(q):
        unit = tuple(1 if t == i else 0 for t in range(q))
        rows.append(unit + unit)
    rhs = (l,) + (j - 1,) * q
    return DiophantineSystem(matrix=tuple(rows), rhs=rhs)


def count_vector_partitions(sys: DiophantineSystem) -> int:
    """Count nonnegative integer R with D . R = S by exhaustive enumeration.

    The slack rows bound each free variable by the corresponding
    right-hand side, so enumerating the free block suffices: the slacks
    are then determined and automatically nonnegative.
    """
    q = len(sys.matrix) - 1
    coeffs = np.array(sys.matrix[0][:q], dtype=np.int64)
    bounds = [sys.rhs[i + 1] for i in range(q)]
    if any(b < 0 for b in bounds):
        return 0
    grids = np.indices([b + 1 for b in bounds], dtype=np.int64)
    dots = np.tensordot(coeffs, grids.reshape(q, -1), axes=1)
    return int(np.count_nonzero(dots == sys.rhs[0]))
