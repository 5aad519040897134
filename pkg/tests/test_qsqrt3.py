from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from coxref.qsqrt3 import R3, QSqrt3, format_scalar, parse_scalar

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 10**4)
elements = st.builds(QSqrt3, rationals, rationals)


def exact(x):
    return sympy.Rational(x.a.numerator, x.a.denominator) + \
        sympy.Rational(x.b.numerator, x.b.denominator) * sympy.sqrt(3)


@given(elements)
def test_sign_matches_symbolic(x):
    e = exact(x)
    expected = 0 if e == 0 else (1 if e.is_positive else -1)
    assert x.sign() == expected


@given(elements, elements)
def test_order_matches_symbolic(x, y):
    d = exact(x) - exact(y)
    assert (x < y) == bool(d.is_negative)
    assert (x == y) == (d == 0)


@given(elements, elements, elements)
def test_field_laws(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert x - x == QSqrt3()
    if x:
        assert x * x.inverse() == QSqrt3(1)
        assert (y / x) * x == y


def test_sqrt3_squares_to_three():
    assert R3 * R3 == 3
    assert R3 ** 2 == QSqrt3(3)


def test_rational_interplay():
    half = QSqrt3(Fraction(1, 2))
    assert half == Fraction(1, 2)
    assert hash(half) == hash(Fraction(1, 2))
    assert 1 - half == Fraction(1, 2)


@pytest.mark.parametrize("text, value", [
    ("1/2", Fraction(1, 2)),
    ("-3", Fraction(-3)),
    ("1/2+1/3*r3", QSqrt3(Fraction(1, 2), Fraction(1, 3))),
    ("1/2 + 1/3 r3", QSqrt3(Fraction(1, 2), Fraction(1, 3))),
    ("r3/6", QSqrt3(0, Fraction(1, 6))),
    ("-r3", QSqrt3(0, -1)),
])
def test_parse(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("bad", ["", "abc", "1/2 1/3", "r4"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_scalar(bad)


@given(elements)
def test_format_round_trip(x):
    assert parse_scalar(format_scalar(x)) == x
