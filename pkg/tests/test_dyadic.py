from __future__ import annotations

import cmath
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from seqcyclic.errors import DomainError
from seqcyclic.operators.composition import (
    CompositionSquare,
    agree_on_unit_interval,
    compose_gamma,
    compose_square,
)
from seqcyclic.spaces.dyadic import DyadicExponent, DyadicPolynomial, eval_dyadic_poly

exponents = st.builds(lambda a, b: Fraction(a, 2**b), st.integers(0, 12), st.integers(0, 4))
polynomials = st.dictionaries(exponents, st.integers(-5, 5), max_size=4).map(DyadicPolynomial)


def test_exponent_canonical_form():
    q = DyadicExponent(6, 3)
    assert (q.numerator, q.scale) == (3, 2)
    assert q.value == Fraction(3, 4)
    zero = DyadicExponent(0, 7)
    assert (zero.numerator, zero.scale) == (0, 0)
    assert DyadicExponent.of("1/2") == DyadicExponent(1, 1)
    assert hash(DyadicExponent.of(Fraction(2, 4))) == hash(DyadicExponent(1, 1))


def test_exponent_rejects_non_dyadic_and_negative():
    with pytest.raises(ValueError):
        DyadicExponent.of(Fraction(1, 3))
    with pytest.raises(ValueError):
        DyadicExponent(-1)


def test_zero_coefficients_are_dropped():
    f = DyadicPolynomial({1: 1, 2: 0, Fraction(1, 2): 3})
    assert [str(q) for q in f.exponents()] == ["1/2", "1"]
    assert (f - f).is_zero()


@pytest.mark.parametrize(
    ("terms", "z", "expected"),
    [
        ({1: 1}, 0.5, 0.5),
        ({Fraction(1, 2): 1}, 0.25, 0.5),
        ({2: 1, 4: -1}, 0.5, 0.1875),
    ],
)
def test_evaluate_examples(terms, z, expected):
    assert eval_dyadic_poly(DyadicPolynomial(terms), z) == pytest.approx(expected)


def test_evaluate_at_zero_and_on_the_cut():
    f = DyadicPolynomial({0: 2, Fraction(1, 4): 5})
    assert f.evaluate(0) == 2
    with pytest.raises(DomainError):
        f.evaluate(-0.5)
    with pytest.raises(DomainError):
        f.evaluate_many([0.5, -1.0])


def test_evaluate_many_matches_scalar_evaluation():
    f = DyadicPolynomial({Fraction(1, 8): 1, 1: -2, Fraction(5, 2): Fraction(1, 3)})
    points = np.array([0.3, 0.5 + 0.2j, 0.9 - 0.1j, 0.01, 0])
    vectorized = f.evaluate_many(points)
    scalar = [f.evaluate(z) for z in points]
    np.testing.assert_allclose(vectorized, scalar, rtol=1e-12, atol=1e-15)


def test_huge_exponents_underflow_to_zero_inside_the_unit_disk():
    f = DyadicPolynomial({DyadicExponent(1, -200): 1})
    assert f.evaluate(0.9) == 0
    assert np.all(f.evaluate_many([0.5, 0.5 + 0.4j]) == 0)


def test_composition_examples():
    half = DyadicPolynomial({Fraction(1, 2): 1})
    assert compose_square(half) == DyadicPolynomial({1: 1})
    assert compose_square(DyadicPolynomial({1: 1, 2: -1})) == DyadicPolynomial({2: 1, 4: -1})
    assert compose_gamma(DyadicPolynomial({1: 1}), 1) == half
    with pytest.raises(ValueError):
        compose_gamma(half, -1)


def test_iterated_square_matches_displayed_limit_formula():
    x1 = DyadicPolynomial({1: 1, 2: -1})
    T = CompositionSquare()
    assert T.power(x1, 5) == DyadicPolynomial({2**5: 1, 2**6: -1})


def test_T3_S1_x1_golden_value():
    x1 = DyadicPolynomial({1: 1, 2: -1})
    T = CompositionSquare()
    value = T.power(T.right_inverse(x1, 1), 3).evaluate(0.5)
    assert value == pytest.approx(0.0625 - 0.00390625)
    assert T.right_inverse(x1, 2) == DyadicPolynomial({Fraction(1, 4): 1, Fraction(1, 2): -1})


def test_gamma_n_tends_to_one():
    x1 = DyadicPolynomial({1: 1, 2: -1})
    values = [abs(compose_gamma(x1, n).evaluate(0.81)) for n in (3, 6, 12, 20)]
    assert values == sorted(values, reverse=True)
    assert values[-1] < 1e-6


@settings(max_examples=200, deadline=None)
@given(polynomials, st.integers(0, 6))
def test_T_k_S_k_is_the_identity(f, k):
    T = CompositionSquare()
    g = T.power(T.right_inverse(f, k), k)
    assert g == f
    assert agree_on_unit_interval(f, g)


@settings(max_examples=200, deadline=None)
@given(polynomials, polynomials, st.integers(-3, 3))
def test_rescaling_is_a_ring_homomorphism(f, g, k):
    assert (f + g).rescaled(k) == f.rescaled(k) + g.rescaled(k)
    assert (f * g).rescaled(k) == f.rescaled(k) * g.rescaled(k)


def test_agree_on_unit_interval_rejects_points_outside():
    f = DyadicPolynomial({1: 1})
    with pytest.raises(ValueError):
        agree_on_unit_interval(f, f, points=[0.0, 0.5])
    assert not agree_on_unit_interval(f, DyadicPolynomial({2: 1}))


points_off_the_cut = st.builds(
    cmath.rect, st.just(0.0) | st.floats(0.01, 1), st.floats(-3.1, 3.1)
)


@settings(max_examples=200, deadline=None)
@given(polynomials, polynomials, points_off_the_cut)
def test_evaluation_is_a_ring_homomorphism(f, g, z):
    fz, gz = eval_dyadic_poly(f, z), eval_dyadic_poly(g, z)
    assert eval_dyadic_poly(f + g, z) == pytest.approx(fz + gz, rel=1e-9, abs=1e-9)
    assert eval_dyadic_poly(f * g, z) == pytest.approx(fz * gz, rel=1e-9, abs=1e-9)


@settings(max_examples=100, deadline=None)
@given(polynomials, st.integers(0, 6), st.integers(0, 6))
def test_transport_rescales_once(f, a, b):
    T = CompositionSquare()
    assert T.transport(f, a, b) == T.power(T.right_inverse(f, b), a)
