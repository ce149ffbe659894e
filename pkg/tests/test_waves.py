from fractions import Fraction as F

import pytest

from sylwaves.bernoulli import GeneratorSet
from sylwaves.oracle import count_partitions_dp
from sylwaves.partition import wave_indices
from sylwaves.waves import (
    split_generators,
    wave_1,
    wave_j_direct,
    wave_j_weighted,
    weights_bruteforce,
    weights_recursive,
)


class TestSplitGenerators:
    def test_basic_split(self):
        ms = split_generators(2, GeneratorSet([1, 2]))
        assert ms.divisible == (2,)
        assert ms.nondivisible == (1,)
        assert ms.combined == GeneratorSet([2, 2])
        assert ms.k_j == 1

    def test_j_one_keeps_everything(self):
        ms = split_generators(1, GeneratorSet([3, 5, 7]))
        assert ms.combined == GeneratorSet([3, 5, 7])
        assert ms.nondivisible == ()
        assert ms.k_j == 3

    def test_mixed_split(self):
        ms = split_generators(3, GeneratorSet([1, 2, 3]))
        assert ms.divisible == (3,)
        assert ms.nondivisible == (1, 2)
        assert ms.combined == GeneratorSet([3, 3, 6])

    def test_multiplicity_preserved(self):
        ms = split_generators(2, GeneratorSet([2, 2, 3, 3]))
        assert len(ms.combined) == 4
        assert ms.combined == GeneratorSet([2, 2, 6, 6])


class TestWave1:
    def test_unit_generator_constant(self):
        d = GeneratorSet([1])
        assert all(wave_1(d, s) == 1 for s in range(-5, 20))

    def test_one_two(self):
        assert wave_1(GeneratorSet([1, 2]), 4) == F(11, 4)

    def test_two_units(self):
        # W(s, {1,1}) = s + 1 exactly; the j=2 wave does not exist.
        assert wave_1(GeneratorSet([1, 1]), 7) == 8


class TestWaveJDirect:
    def test_one_two_closed_form(self):
        d = GeneratorSet([1, 2])
        assert wave_j_direct(2, d, 4) == F(1, 4)
        assert wave_j_direct(2, d, 5) == F(-1, 4)

    def test_all_divisible_empty_r_sum(self):
        d = GeneratorSet([2])
        for s in range(0, 12):
            total = wave_1(d, s) + wave_j_direct(2, d, s)
            assert total == count_partitions_dp(d, s)
        assert wave_1(d, 4) + wave_j_direct(2, d, 4) == 1

    def test_rejects_j_dividing_nothing(self):
        with pytest.raises(ValueError):
            wave_j_direct(5, GeneratorSet([1, 2, 3]), 0)

    def test_rejects_j_below_two(self):
        with pytest.raises(ValueError):
            wave_j_direct(1, GeneratorSet([1, 2]), 0)


class TestWeights:
    def test_bruteforce_example(self):
        w = weights_bruteforce(3, GeneratorSet([1, 2, 3]))
        assert w.l_max == 6
        assert w.weights == (1, 1, 2, 1, 2, 1, 1)

    def test_recursive_example(self):
        w = weights_recursive(3, GeneratorSet([1, 2, 3]))
        assert w.weights == (1, 1, 2, 1, 2, 1, 1)

    def test_recursive_single_free_generator(self):
        w = weights_recursive(2, GeneratorSet([1, 2]))
        assert w.l_max == 1
        assert w.weights == (1, 1)

    def test_mass_with_no_divisible_generator(self):
        w = weights_bruteforce(2, GeneratorSet([1, 3, 5]))
        assert sum(w.weights) == 8

    def test_trivial_vector_all_divisible(self):
        assert weights_bruteforce(2, GeneratorSet([2, 4])).weights == (1,)
        assert weights_recursive(2, GeneratorSet([2, 4])).weights == (1,)

    def test_signed_term_values_for_l_4(self):
        # A_4 for j=3, d={1,2,3}: W(4,{1,2}) - W(1,{1,2}) - W(-2) + W(-5).
        sub = GeneratorSet([1, 2])
        assert count_partitions_dp(sub, 4) == 3
        assert count_partitions_dp(sub, 1) == 1
        assert weights_recursive(3, GeneratorSet([1, 2, 3])).weights[4] == 2

    def test_recursive_with_wave_engine_counter(self):
        # The fully recursive variant: scalar counts supplied by the wave
        # engine itself, DP as referee.
        from sylwaves.partition import partition_count

        def counter(sub, s):
            return partition_count(sub, s)

        d = GeneratorSet([1, 2, 3, 4])
        for j in (2, 3, 4):
            assert weights_recursive(j, d, counter).weights == \
                weights_bruteforce(j, d).weights


class TestWaveJWeighted:
    def test_matches_direct_one_two(self):
        d = GeneratorSet([1, 2])
        w = weights_recursive(2, d)
        assert wave_j_weighted(2, d, 4, w) == F(1, 4)

    def test_matches_direct_one_two_three(self):
        d = GeneratorSet([1, 2, 3])
        w = weights_recursive(3, d)
        assert wave_j_weighted(3, d, 6, w) == wave_j_direct(3, d, 6)

    def test_decomposition_at_zero(self):
        d = GeneratorSet([1, 2])
        total = wave_1(d, 0) + wave_j_weighted(2, d, 0, weights_recursive(2, d))
        assert total == 1

    def test_rejects_mismatched_weight_vector(self):
        w = weights_recursive(2, GeneratorSet([1, 2]))
        with pytest.raises(ValueError):
            wave_j_weighted(2, GeneratorSet([1, 4]), 3, w)
        with pytest.raises(ValueError):
            wave_j_weighted(4, GeneratorSet([1, 2]), 3, w)


def _small_corpus():
    return [GeneratorSet(d) for d in
            ([1], [2], [1, 2], [2, 2], [1, 2, 3], [2, 3, 4], [1, 1, 2], [3, 4, 6])]


def test_form_equivalence_small_corpus():
    for d in _small_corpus():
        for j in wave_indices(d):
            if j < 2:
                continue
            wr = weights_recursive(j, d)
            wb = weights_bruteforce(j, d)
            assert wr.weights == wb.weights
            for s in range(-15, 60):
                direct = wave_j_direct(j, d, s)
                assert direct == wave_j_weighted(j, d, s, wr)
                assert direct == wave_j_weighted(j, d, s, wb)


def test_weight_invariants_small_corpus():
    for d in _small_corpus():
        for j in wave_indices(d):
            if j < 2:
                continue
            w = weights_bruteforce(j, d)
            k_j = split_generators(j, d).k_j
            assert all(a >= 0 for a in w.weights)
            assert sum(w.weights) == j ** (d.m - k_j)
            assert w.weights[w.l_max] >= 1
            assert len(w.weights) == w.l_max + 1
