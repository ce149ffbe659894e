"""Self-verification sweeps: every identity checked against an oracle.

Each check walks a corpus of generator sets and returns a result with
the number of checks performed and any counterexamples found.  The
checks are shared by the command-line ``verify`` command and the
acceptance test suite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import lcm
from typing import Callable, List, Optional, Sequence

from .bernoulli import GeneratorSet
from .circulator import euler_totient, prime_circulator, prime_circulator_complex
from .oracle import build_system, count_partitions_dp, count_vector_partitions, partition_counts_upto
from .partition import (
    partition_count,
    quasipolynomial,
    wave_indices,
    wave_residue_polynomials_direct,
    wave_residue_polynomials_weighted,
)
from .waves import (
    split_generators,
    wave_j_direct,
    wave_j_weighted,
    weights_bruteforce,
    weights_recursive,
)

__all__ = [
    "CheckResult",
    "all_multisets",
    "random_multisets",
    "check_oracle_equivalence",
    "check_form_equivalence",
    "check_weight_agreement",
    "check_circulator_identities",
    "check_quasipolynomial_fidelity",
    "run_all",
]


@dataclass
class CheckResult:
    name: str
    checks: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        if self.passed:
            return f"PASS {self.name} ({self.checks} checks)"
        head = self.failures[0]
        return (
            f"FAIL {self.name} ({len(self.failures)} of {self.checks} checks); "
            f"first counterexample: {head}"
        )


def all_multisets(max_m: int, max_d: int) -> List[GeneratorSet]:
    """Every multiset of generators with size <= max_m, elements <= max_d."""
    sets = []
    for m in range(1, max_m + 1):
        for combo in combinations_with_replacement(range(1, max_d + 1), m):
            sets.append(GeneratorSet(combo))
    return sets


def random_multisets(count: int, max_m: int, max_d: int, seed: int) -> List[GeneratorSet]:
    """Seeded random multisets (sorted for readability; order is immaterial)."""
    rng = random.Random(seed)
    sets = []
    for _ in range(count):
        m = rng.randint(1, max_m)
        sets.append(GeneratorSet(sorted(rng.randint(1, max_d) for _ in range(m))))
    return sets


def check_oracle_equivalence(sets: Sequence[GeneratorSet], s_max: int) -> CheckResult:
    """Wave-sum totals against the DP counter for all s in 0..s_max."""
    res = CheckResult("oracle-equivalence")
    for d in sets:
        dp = partition_counts_upto(d, s_max)
        for s in range(s_max + 1):
            res.checks += 1
            got = partition_count(d, s)
            if got != dp[s]:
                res.failures.append(f"d={d.d} s={s}: waves={got} dp={dp[s]}")
    return res


def _sample_range(stop: int, limit: int) -> List[int]:
    """Up to `limit` evenly spread integers covering 0..stop inclusive."""
    if stop + 1 <= limit:
        return list(range(stop + 1))
    return sorted({round(i * stop / (limit - 1)) for i in range(limit)})


def check_form_equivalence(
    sets: Sequence[GeneratorSet], pointwise_samples: int = 16
) -> CheckResult:
    """Direct wave form against the weighted form, for every wave index.

    The two forms are compared symbolically, residue class by residue
    class mod j, which settles equality at every integer argument (in
    particular all of 0..3*lcm(d)).  Pointwise evaluator checks run in
    addition, at up to ``pointwise_samples`` spread points of that range.
    """
    res = CheckResult("form-equivalence")
    for d in sets:
        span = 3 * lcm(*d.d)
        for j in wave_indices(d):
            if j < 2:
                continue
            w = weights_recursive(j, d)
            direct = wave_residue_polynomials_direct(j, d)
            weighted = wave_residue_polynomials_weighted(j, d, w)
            for c in range(j):
                res.checks += 1
                if direct[c] != weighted[c]:
                    res.failures.append(
                        f"d={d.d} j={j} residue={c}: "
                        f"direct poly {direct[c]!r} != weighted poly {weighted[c]!r}"
                    )
            for s in _sample_range(span, pointwise_samples):
                res.checks += 1
                lhs = wave_j_direct(j, d, s)
                rhs = wave_j_weighted(j, d, s, w)
                if lhs != rhs:
                    res.failures.append(
                        f"d={d.d} j={j} s={s}: direct={lhs} weighted={rhs}"
                    )
    return res


def check_weight_agreement(
    sets: Sequence[GeneratorSet],
    weights_fn: Optional[Callable[[int, GeneratorSet], object]] = None,
) -> CheckResult:
    """Triple agreement of the weight definitions, plus the mass identity.

    For every wave index j of every set: enumeration, the Diophantine
    solution count, and the recursive signed-sum formula must agree at
    every l, and the weights must sum to j^(m - k_j).  ``weights_fn``
    replaces the recursive formula (used by the negative control).
    """
    if weights_fn is None:
        weights_fn = weights_recursive
    res = CheckResult("weight-agreement")
    for d in sets:
        for j in wave_indices(d):
            if j < 2:
                continue
            ms = split_generators(j, d)
            wb = weights_bruteforce(j, d)
            wr = weights_fn(j, d)
            if not ms.nondivisible:
                res.checks += 1
                if wb.weights != (1,) or wr.weights != (1,):
                    res.failures.append(
                        f"d={d.d} j={j}: trivial vector expected, "
                        f"got brute={wb.weights} recursive={wr.weights}"
                    )
                continue
            for l in range(wb.l_max + 1):
                res.checks += 1
                system_count = count_vector_partitions(build_system(j, d, l))
                if not (wb.weights[l] == system_count == wr.weights[l]):
                    res.failures.append(
                        f"d={d.d} j={j} l={l}: brute={wb.weights[l]} "
                        f"system={system_count} recursive={wr.weights[l]}"
                    )
            res.checks += 1
            expected_mass = j ** (d.m - ms.k_j)
            if sum(wb.weights) != expected_mass:
                res.failures.append(
                    f"d={d.d} j={j}: weight mass {sum(wb.weights)} != {expected_mass}"
                )
    return res


def check_circulator_identities(j_max: int = 24) -> CheckResult:
    """Periodicity, zero mean, totient value, and the complex oracle."""
    res = CheckResult("circulator-identities")
    for j in range(1, j_max + 1):
        for s in range(-j, 2 * j):
            res.checks += 1
            if prime_circulator(j, s + j) != prime_circulator(j, s):
                res.failures.append(f"j={j} s={s}: periodicity broken")
        if j >= 2:
            res.checks += 1
            mean = sum(prime_circulator(j, k) for k in range(j))
            if mean != 0:
                res.failures.append(f"j={j}: residue sum {mean} != 0")
        res.checks += 1
        if prime_circulator(j, 0) != euler_totient(j):
            res.failures.append(f"j={j}: value at 0 != totient")
        tol = 1e-9 * max(1, euler_totient(j))
        for s in range(j):
            res.checks += 1
            z = prime_circulator_complex(j, s)
            if abs(prime_circulator(j, s) - z.real) > tol or abs(z.imag) > 1e-9:
                res.failures.append(f"j={j} s={s}: complex oracle mismatch ({z})")
    return res


def check_quasipolynomial_fidelity(
    sets: Sequence[GeneratorSet], engine_sample: int = 48
) -> CheckResult:
    """Closed-form quasipolynomial against DP over three full periods.

    The DP comparison covers every s in 0..3L; the wave-engine
    cross-check evaluates at up to ``engine_sample`` spread points of
    the same range (the engine shares the per-residue polynomials, so
    the DP referee carries the independent evidence).
    """
    res = CheckResult("quasipolynomial-fidelity")
    for d in sets:
        q = quasipolynomial(d)
        span = 3 * q.period
        dp = partition_counts_upto(d, span)
        for s in range(span + 1):
            res.checks += 1
            if q.evaluate(s) != dp[s]:
                res.failures.append(
                    f"d={d.d} s={s}: quasipoly={q.evaluate(s)} dp={dp[s]}"
                )
                break
        for s in _sample_range(span, engine_sample):
            res.checks += 1
            if q.evaluate(s) != partition_count(d, s):
                res.failures.append(
                    f"d={d.d} s={s}: quasipoly={q.evaluate(s)} "
                    f"engine={partition_count(d, s)}"
                )
        res.checks += 1
        if any(p.degree > d.m - 1 for p in q.residue_polys):
            res.failures.append(f"d={d.d}: residue polynomial degree exceeds m-1")
    return res


def run_all(
    max_m: int,
    max_d: int,
    s_max: int,
    seed: int = 0,
    random_sets: int = 0,
    random_max_m: int = 5,
    random_max_d: int = 12,
) -> List[CheckResult]:
    """The four verification suites over a configurable corpus."""
    sets = all_multisets(max_m, max_d)
    if random_sets:
        sets = sets + random_multisets(random_sets, random_max_m, random_max_d, seed)
    return [
        check_circulator_identities(),
        check_weight_agreement(sets),
        check_form_equivalence(sets),
        check_oracle_equivalence(sets, s_max),
    ]
