import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plc.utils.iteration import count_candidate_pairs, candidate_pairs, split_pair_range
from plc.utils.math import nchoosek, at_most_power_of_two, below_tower_of_four, fraction_at_least_sqrt_scaled


@given(st.integers(0, 60), st.integers(0, 60))
@settings(max_examples=200)
def test_candidate_pairs_are_the_pairs_with_a_fresh_member(total, fresh_from):
    expected = {(i, j) for i, j in itertools.combinations(range(total), 2) if j >= fresh_from}
    pairs = list(candidate_pairs(total, fresh_from))
    assert set(pairs) == expected and len(pairs) == len(expected)
    assert count_candidate_pairs(total, fresh_from) == len(expected)


@given(st.integers(0, 80), st.integers(0, 80), st.integers(1, 40))
@settings(max_examples=200)
def test_chunks_partition_the_pairs(total, fresh_from, n_chunks):
    chunks = split_pair_range(total, fresh_from, n_chunks)
    covered = [p for start, end in chunks for p in candidate_pairs(total, fresh_from, start, end)]
    assert sorted(covered) == sorted(candidate_pairs(total, fresh_from))


def test_exact_comparisons():
    assert nchoosek(9, 2) == 36
    assert nchoosek(2, 3) == 0
    assert at_most_power_of_two(256, 8) and not at_most_power_of_two(257, 8)
    assert below_tower_of_four(256, 1) and not below_tower_of_four(257, 1)
    assert below_tower_of_four(2 ** 32, 2)
    assert fraction_at_least_sqrt_scaled(Fraction(2), Fraction(1), Fraction(4))
    assert not fraction_at_least_sqrt_scaled(Fraction(2), Fraction(1), Fraction(5))
    with pytest.raises(ValueError):
        fraction_at_least_sqrt_scaled(Fraction(-1), Fraction(1), Fraction(1))
