from itertools import permutations, product

import pytest

from sylwaves.bernoulli import GeneratorSet
from sylwaves.oracle import (
    build_system,
    count_partitions_dp,
    count_vector_partitions,
    partition_counts_upto,
)


class TestCountPartitionsDP:
    def test_one_two(self):
        assert count_partitions_dp(GeneratorSet([1, 2]), 4) == 3

    def test_one_two_three(self):
        assert count_partitions_dp(GeneratorSet([1, 2, 3]), 5) == 5

    def test_negative_is_zero(self):
        assert count_partitions_dp(GeneratorSet([3, 7]), -1) == 0

    def test_zero_is_empty_partition(self):
        assert count_partitions_dp(GeneratorSet([3, 7]), 0) == 1

    def test_against_exhaustive_enumeration(self):
        d = (2, 3, 5)
        for s in range(0, 25):
            brute = sum(
                1
                for xs in product(*(range(s // di + 1) for di in d))
                if sum(x * di for x, di in zip(xs, d)) == s
            )
            assert count_partitions_dp(GeneratorSet(d), s) == brute

    def test_permutation_invariance(self):
        base = (1, 2, 3, 5)
        for perm in permutations(base):
            for s in (0, 7, 30):
                assert count_partitions_dp(GeneratorSet(perm), s) == \
                    count_partitions_dp(GeneratorSet(base), s)

    def test_adding_generator_never_decreases_count(self):
        d = GeneratorSet([2, 3])
        bigger = GeneratorSet([2, 3, 5])
        for s in range(0, 40):
            assert count_partitions_dp(bigger, s) >= count_partitions_dp(d, s)

    def test_counts_upto_consistent_with_point_queries(self):
        d = GeneratorSet([1, 2, 5])
        table = partition_counts_upto(d, 30)
        assert len(table) == 31
        assert table == [count_partitions_dp(d, s) for s in range(31)]

    def test_big_integer_counts(self):
        # Counts for {1,1,1,1,1} grow like a binomial; stays exact.
        d = GeneratorSet([1] * 5)
        s = 500
        expected = (s + 1) * (s + 2) * (s + 3) * (s + 4) // 24
        assert count_partitions_dp(d, s) == expected


class TestBuildSystem:
    def test_matrix_layout(self):
        sys_ = build_system(3, GeneratorSet([1, 2, 3]), 2)
        assert sys_.matrix == ((1, 2, 0, 0), (1, 0, 1, 0), (0, 1, 0, 1))
        assert sys_.rhs == (2, 2, 2)

    def test_single_free_variable(self):
        sys_ = build_system(2, GeneratorSet([1, 2]), 1)
        assert sys_.matrix == ((1, 0), (1, 1))
        assert sys_.rhs == (1, 1)

    def test_rhs_pattern(self):
        sys_ = build_system(2, GeneratorSet([1, 3, 4]), 0)
        assert sys_.rhs == (0, 1, 1)

    def test_rejects_all_divisible(self):
        with pytest.raises(ValueError):
            build_system(2, GeneratorSet([2, 4]), 0)


class TestCountVectorPartitions:
    def test_matches_weight(self):
        assert count_vector_partitions(build_system(3, GeneratorSet([1, 2, 3]), 2)) == 2

    def test_single_solution(self):
        assert count_vector_partitions(build_system(2, GeneratorSet([1, 2]), 1)) == 1

    def test_beyond_l_max_is_zero(self):
        assert count_vector_partitions(build_system(3, GeneratorSet([1, 2, 3]), 7)) == 0

    def test_full_profile_for_example(self):
        counts = [
            count_vector_partitions(build_system(3, GeneratorSet([1, 2, 3]), l))
            for l in range(7)
        ]
        assert counts == [1, 1, 2, 1, 2, 1, 1]
