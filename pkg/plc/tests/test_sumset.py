from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plc.oracles.sumset import SumsetInstance, sumset, sumset_size, is_aligned_progression

rational_sets = st.lists(st.fractions(min_value=-50, max_value=50, max_denominator=12), min_size=1, max_size=8,
                         unique=True)


def test_known_sizes():
    assert sumset_size(SumsetInstance((0, 1, 3), (0, 1, 3))) == 6
    assert sumset_size(SumsetInstance((0, 1, 2), (0, 1, 2))) == 5
    assert sumset([0, 1], [10]) == {10, 11}


def test_instances_reject_repeats_and_empty_sets():
    with pytest.raises(ValueError):
        SumsetInstance((0, 1, 1), (2,))
    with pytest.raises(ValueError):
        sumset_size(SumsetInstance((), (1,)))


@given(rational_sets, rational_sets)
@settings(max_examples=100)
def test_lower_bound(a, b):
    inst = SumsetInstance(tuple(a), tuple(b))
    assert sumset_size(inst) >= len(a) + len(b) - 1


@pytest.mark.slow
@given(rational_sets, rational_sets)
@settings(max_examples=1000)
def test_lower_bound_many_instances(a, b):
    inst = SumsetInstance(tuple(a), tuple(b))
    assert sumset_size(inst) >= len(a) + len(b) - 1


@given(st.fractions(max_denominator=20), st.fractions(max_denominator=20),
       st.fractions(min_value=Fraction(1, 20), max_value=10, max_denominator=20),
       st.integers(1, 8), st.integers(1, 8))
@settings(max_examples=100)
def test_aligned_progressions_attain_the_bound(a0, b0, d, len_a, len_b):
    inst = SumsetInstance(tuple(a0 + i * d for i in range(len_a)), tuple(b0 + j * d for j in range(len_b)))
    assert is_aligned_progression(inst)
    assert sumset_size(inst) == len_a + len_b - 1


def test_misaligned_progressions():
    assert not is_aligned_progression(SumsetInstance((0, 1, 2), (0, 2, 4)))
    assert not is_aligned_progression(SumsetInstance((0, 1, 3), (0, 1)))
    assert sumset_size(SumsetInstance((0, 1, 2), (0, 2, 4))) > 5
