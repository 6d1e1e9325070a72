from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cubictorsion.errors import InputError
from cubictorsion.rationals import (
    format_rational,
    integer_nth_root,
    is_perfect_power,
    is_square_rational,
    parse_rational,
    rational_nth_root,
    rational_sqrt,
)


def test_parse_basic():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-27") == Fraction(-27)
    assert parse_rational(" 5/3 ") == Fraction(5, 3)
    assert parse_rational(7) == Fraction(7)
    assert parse_rational(Fraction(1, 2)) == Fraction(1, 2)


def test_parse_rejects_junk():
    with pytest.raises(InputError):
        parse_rational("1/0")
    with pytest.raises(InputError):
        parse_rational("x")
    with pytest.raises(InputError):
        parse_rational(0.5)  # binary floats are not exact inputs


@given(st.fractions())
def test_format_round_trip(q):
    assert parse_rational(format_rational(q)) == q


def test_format_shape():
    assert format_rational(Fraction(3, 4)) == "3/4"
    assert format_rational(Fraction(-27)) == "-27"
    assert format_rational(Fraction(6, 4)) == "3/2"


@given(st.integers(min_value=0, max_value=10 ** 30), st.integers(min_value=1, max_value=7))
def test_integer_nth_root_floor(n, k):
    r = integer_nth_root(n, k)
    assert r ** k <= n < (r + 1) ** k


@given(st.integers(min_value=-10 ** 12, max_value=10 ** 12), st.integers(min_value=2, max_value=6))
def test_perfect_power_detects_powers(base, k):
    assert is_perfect_power(base ** k, k)


@given(st.fractions(min_value=-10 ** 9, max_value=10 ** 9, max_denominator=10 ** 6))
def test_rational_sqrt_of_square(q):
    s = rational_sqrt(q * q)
    assert s == abs(q)
    assert is_square_rational(q * q)


def test_rational_sqrt_negatives_and_nonsquares():
    assert rational_sqrt(Fraction(-4)) is None
    assert rational_sqrt(Fraction(2)) is None
    assert rational_sqrt(Fraction(4, 9)) == Fraction(2, 3)


@given(st.fractions(min_value=-10 ** 6, max_value=10 ** 6, max_denominator=10 ** 4), st.integers(min_value=2, max_value=5))
def test_rational_nth_root_of_power(q, k):
    r = rational_nth_root(q ** k, k)
    assert r == (abs(q) if k % 2 == 0 else q)


def test_cube_root_sign():
    assert rational_nth_root(Fraction(-27, 8), 3) == Fraction(-3, 2)
