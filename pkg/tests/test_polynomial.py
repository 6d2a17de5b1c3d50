from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hilbert_lambda.polynomial import (
    DenominatorZeroError,
    Polynomial,
    PolynomialSyntaxError,
    format_polynomial,
    format_rational,
    parse_polynomial,
    sample_points,
)

coefficients = st.lists(
    st.fractions(min_value=-100, max_value=100, max_denominator=30),
    max_size=8,
)


def test_constructor_strips_trailing_zeros():
    assert Polynomial([1, 0, 0]).coeffs == (Fraction(1),)
    assert Polynomial([0, 0]).coeffs == ()


def test_degree_of_zero_polynomial_is_none():
    assert Polynomial([]).degree() is None
    assert Polynomial([0]).degree() is None
    assert Polynomial([7]).degree() == 0
    assert Polynomial([0, 0, Fraction(1, 2)]).degree() == 2


def test_equality_and_hash_on_canonical_form():
    assert Polynomial([1, 2]) == Polynomial([Fraction(1), Fraction(2), 0])
    assert hash(Polynomial([1, 2])) == hash(Polynomial([1, 2, 0]))
    assert Polynomial([1]) != Polynomial([2])
    assert not Polynomial([0])
    assert Polynomial([0, 1])


def test_evaluate_worked_value():
    p = Polynomial([1, Fraction(3, 2), Fraction(1, 2)])
    assert p.evaluate(2) == 6


def test_evaluate_accepts_rational_points():
    p = Polynomial([0, 0, 1])
    assert p.evaluate(Fraction(1, 2)) == Fraction(1, 4)


@given(coefficients, st.fractions(min_value=-10, max_value=10, max_denominator=10))
def test_evaluate_matches_term_by_term_sum(coeffs, x):
    p = Polynomial(coeffs)
    expected = sum((c * x**power for power, c in enumerate(p.coeffs)), Fraction(0))
    assert p.evaluate(x) == expected


def test_sample_points_prefix():
    p = Polynomial([1, Fraction(3, 2), Fraction(1, 2)])
    assert sample_points(p, 2).window() == (1, 3, 6)
    assert len(sample_points(p, 5)) == 6


def test_sample_points_rejects_negative_count():
    with pytest.raises(ValueError):
        sample_points(Polynomial([1]), -1)


def test_format_rational():
    assert format_rational(Fraction(3, 2)) == "3/2"
    assert format_rational(Fraction(4)) == "4"
    assert format_rational(Fraction(-5, 3)) == "-5/3"


@pytest.mark.parametrize(
    "coeffs, text",
    [
        ([], "0"),
        ([1], "1"),
        ([-1], "-1"),
        ([0, 1], "x"),
        ([0, Fraction(-1, 2)], "-1/2*x"),
        ([2, 0, -1], "-x^2 + 2"),
        ([1, Fraction(3, 2), Fraction(1, 2)], "1/2*x^2 + 3/2*x + 1"),
        ([1, 3], "3*x + 1"),
        ([-2, 1], "x - 2"),
    ],
)
def test_format_polynomial(coeffs, text):
    assert format_polynomial(Polynomial(coeffs)) == text
    assert str(Polynomial(coeffs)) == text


@pytest.mark.parametrize(
    "text, coeffs",
    [
        ("0", []),
        ("3*x + 1", [1, 3]),
        ("3/2*x^2", [0, 0, Fraction(3, 2)]),
        ("3/2x^2", [0, 0, Fraction(3, 2)]),
        ("  3/2  x^2  ", [0, 0, Fraction(3, 2)]),
        ("x/2", [0, Fraction(1, 2)]),
        ("x^2/3", [0, 0, Fraction(1, 3)]),
        ("1/2*x", [0, Fraction(1, 2)]),
        ("-x + 1", [1, -1]),
        ("- 3", [-3]),
        ("x + x", [0, 2]),
        ("2 - 3", [-1]),
        ("x^2/2 + x/2 - 1", [-1, Fraction(1, 2), Fraction(1, 2)]),
        ("x^3 - x", [0, -1, 0, 1]),
        ("5/10", [Fraction(1, 2)]),
    ],
)
def test_parse_polynomial(text, coeffs):
    assert parse_polynomial(text) == Polynomial(coeffs)


def test_parse_equivalent_spellings():
    assert parse_polynomial("3/2*x^2") == parse_polynomial("3/2x^2")
    assert parse_polynomial("x/2") == parse_polynomial("1/2*x")


@pytest.mark.parametrize(
    "text, position",
    [
        ("", 0),
        ("   ", 3),
        ("x +", 3),
        ("y", 0),
        ("*x", 0),
        ("3*", 2),
        ("3*y", 2),
        ("x^", 2),
        ("x^-2", 2),
        ("x 2", 2),
        ("3x 4", 3),
    ],
)
def test_parse_errors_carry_position(text, position):
    with pytest.raises(PolynomialSyntaxError) as info:
        parse_polynomial(text)
    assert info.value.position == position
    assert f"at column {position}" in str(info.value)


@pytest.mark.parametrize("text", ["1/0", "x/0", "1/2*x/0", "3/0*x"])
def test_zero_denominator_is_its_own_error(text):
    with pytest.raises(DenominatorZeroError):
        parse_polynomial(text)


@given(coefficients)
def test_format_parse_round_trip(coeffs):
    p = Polynomial(coeffs)
    assert parse_polynomial(format_polynomial(p)) == p
