from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from seqcyclic.errors import HorizonError
from seqcyclic.spaces.graded_space import (
    GradedSpace,
    ball_membership,
    ball_radius,
    fnorm,
    fnorm_of_values,
)
from seqcyclic.spaces.grid_vector import GridVector
from seqcyclic.spaces.sequence_norms import SequenceNorm

HORIZON = 4

coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=8)
row_vectors = st.dictionaries(st.integers(1, 6), coefficients, max_size=4).map(
    GridVector.first_row
)
spaces = st.sampled_from(
    [
        GradedSpace.of_sequence_norm(SequenceNorm.ellp(1), HORIZON),
        GradedSpace.of_sequence_norm(SequenceNorm.c0(), HORIZON),
        GradedSpace.of_sequence_norm(SequenceNorm.s(0), HORIZON),
    ]
)


def constant_space(*values):
    return GradedSpace(lambda v: values, len(values))


def test_fnorm_examples():
    assert fnorm_of_values([1]) == Fraction(1, 2)
    assert fnorm_of_values([0.1, 0.3]) == pytest.approx(0.125)
    assert fnorm_of_values([Fraction(7), Fraction(1, 2)]) == Fraction(5, 8)
    assert isinstance(fnorm_of_values([Fraction(1, 3), 0]), Fraction)


def test_ball_radius():
    assert ball_radius(3) == Fraction(1, 8)
    assert ball_radius(0) == 1
    assert ball_radius(-1) == 1


def test_ball_membership_boundaries():
    space = GradedSpace(lambda v: (v,) * 3, 3)
    assert fnorm(space, 0.2) == pytest.approx(0.175)
    target = constant_space(Fraction(2, 5), Fraction(0), Fraction(0))
    assert fnorm(target, None) == Fraction(1, 5)
    assert ball_membership(target, None, 2)
    assert not ball_membership(target, None, 3)
    assert ball_membership(target, None, 0)


def test_ball_membership_beyond_horizon():
    with pytest.raises(HorizonError):
        ball_membership(constant_space(0, 0), None, 3)


def test_seminorm_accessors():
    space = GradedSpace.of_sequence_norm(SequenceNorm.s(0), 3)
    v = GridVector.basis(1, 2)
    assert space.seminorm_values(v) == (1, 2, 4)
    assert space.seminorm(3)(v) == 4
    with pytest.raises(HorizonError):
        space.seminorm(4)
    short = GradedSpace(lambda v: (1,), 2)
    with pytest.raises(HorizonError):
        short.seminorm_values(None)
    with pytest.raises(ValueError):
        GradedSpace(lambda v: (), 0)


@settings(max_examples=1000, deadline=None)
@given(spaces, row_vectors, row_vectors)
def test_fnorm_is_subadditive(space, u, v):
    assert fnorm(space, u + v) <= fnorm(space, u) + fnorm(space, v)


@settings(max_examples=1000, deadline=None)
@given(spaces, row_vectors, st.fractions(min_value=-1, max_value=1, max_denominator=16))
def test_fnorm_is_balanced(space, v, scalar):
    assert fnorm(space, v * scalar) <= fnorm(space, v)


@settings(max_examples=1000, deadline=None)
@given(spaces, row_vectors, row_vectors, st.integers(1, HORIZON))
def test_sum_of_two_balls_lies_in_the_next_larger_ball(space, u, v, n):
    def into_ball(w):
        return w * (ball_radius(n) / (1 + max(space.seminorm_values(w))))

    u, v = into_ball(u), into_ball(v)
    assert ball_membership(space, u, n)
    assert ball_membership(space, v, n)
    assert ball_membership(space, u + v, n - 1)
