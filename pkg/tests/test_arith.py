from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from unirank3.arith import (
    HalfInt,
    RangeExceeded,
    Rational,
    ZeroDenominator,
    half,
    rat,
    rat_text,
    rational,
)


def test_rat_coercions():
    assert rat(3) == Rational(3)
    assert rat("5/2") == Rational(5, 2)
    assert rat("-7") == Rational(-7)
    assert rat(Fraction(4, 6)) == Rational(2, 3)


def test_zero_denominator():
    with pytest.raises(ZeroDenominator):
        rational(1, 0)


def test_rat_text_forms():
    assert rat_text(Rational(4, 2)) == "2"
    assert rat_text(Rational(-3, 2)) == "-3/2"
    assert str(Rational(1, 2)) == "1/2"


def test_half_integer_validation():
    assert half("3/2").value == Rational(3, 2)
    assert half(2).twice_value == 4
    with pytest.raises(ValueError):
        half("1/3")


def test_half_integer_range_cap():
    with pytest.raises(RangeExceeded):
        HalfInt(100000)


def test_half_integer_arithmetic():
    a, b = half("1/2"), half(1)
    assert (a + b).value == Rational(3, 2)
    assert (a - b).value == Rational(-1, 2)
    assert (-a).value == Rational(-1, 2)
    assert a < b <= half(1)


@given(st.integers(-400, 400), st.integers(1, 50))
def test_rat_text_round_trip(num, den):
    q = Rational(num, den)
    assert rat(rat_text(q)) == q


@given(st.integers(-500, 500))
def test_half_round_trip(twice):
    h = HalfInt(twice)
    assert half(h.value) == h
