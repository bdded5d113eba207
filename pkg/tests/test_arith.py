from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradedvol.arith import (
    RadicalNumber,
    WeightVector,
    exact_ceil,
    exact_floor,
    parse_radical,
    rad_compare,
    rad_to_decimal,
    squarefree_kernel,
)

R = RadicalNumber
s2, s3, s6 = R.sqrt(2), R.sqrt(3), R.sqrt(6)


def test_addition_examples():
    assert (1 + s2) + (2 - s2) == 3
    assert s2 + s2 == R.sqrt(2, 2)
    assert str(s2 + s2) == "2√2"
    got = (Fraction(1, 2) + s2) + (Fraction(1, 3) + s3)
    assert got == Fraction(5, 6) + s2 + s3
    assert str(got) == "5/6 + √2 + √3"


def test_multiplication_examples():
    assert s2 * s2 == 2
    assert s2 * s3 == s6
    assert (1 + s2) * (1 - s2) == -1
    assert R.sqrt(8) == 2 * s2


def test_compare_examples():
    assert rad_compare(Fraction(3, 2), s2) == 1
    assert rad_compare(s2, s2) == 0
    assert rad_compare(1 + s2, s6) == -1


def test_decimal_examples():
    assert rad_to_decimal(s2, 5) == "1.41421"
    assert rad_to_decimal(s2 / 4, 6) == "0.353553"
    assert rad_to_decimal(R(), 3) == "0.000"
    assert rad_to_decimal(-s2, 3) == "-1.414"
    assert rad_to_decimal(Fraction(5, 2), 2, with_direction=True) == ("2.50", "exact")
    assert rad_to_decimal(Fraction(1, 3), 2, with_direction=True) == ("0.33", "truncated")


def test_inverse_renders_half_root_two_over_two():
    assert str((2 * s2).inverse()) == "√2/4"
    assert (1 + s2 + s3).inverse() * (1 + s2 + s3) == 1


def test_floor_ceil_exact():
    assert exact_floor(s2) == 1 and exact_ceil(s2) == 2
    assert exact_floor(-s2) == -2
    assert exact_floor(R.sqrt(10**12 + 1)) == 10**6
    assert exact_ceil(Fraction(7, 1)) == 7


def test_squarefree_kernel():
    assert squarefree_kernel(72) == (6, 2)
    assert squarefree_kernel(1) == (1, 1)


def test_parse_radical():
    assert parse_radical("3/2*sqrt(5)") == R.sqrt(5, Fraction(3, 2))
    assert parse_radical("1 - √2/4") == 1 - s2 / 4
    with pytest.raises(ValueError):
        parse_radical("sqrt(2")


def test_json_roundtrip():
    x = Fraction(5, 6) + s2 - 3 * s6
    assert R.from_json(x.to_json()) == x


def test_weight_vector_checks():
    w = WeightVector([1, s2])
    assert w.d == 2
    with pytest.raises(ValueError):
        WeightVector([1, 2])  # rationally dependent
    assert WeightVector([1, 2], strict=False).d == 2
    with pytest.raises(ValueError):
        WeightVector([Fraction(1, 2), s2])


def test_zero_division():
    with pytest.raises(ZeroDivisionError):
        s2 / R()


# -- properties ---------------------------------------------------------------

small_q = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def radicals(draw):
    x = R.rational(draw(small_q))
    for r in draw(st.lists(st.sampled_from([2, 3, 5, 6, 7, 10]), max_size=3, unique=True)):
        x = x + R.sqrt(r, draw(small_q))
    return x


@settings(max_examples=150, deadline=None)
@given(radicals(), radicals(), radicals())
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    if not a.is_zero():
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@settings(max_examples=150, deadline=None)
@given(radicals(), radicals(), radicals())
def test_total_order(a, b, c):
    assert [a < b, a == b, b < a].count(True) == 1
    if a < b and b < c:
        assert a < c
    assert (a < b) == (a + c < b + c)
    if abs(float(a) - float(b)) > 1e-9:
        assert (a < b) == (float(a) < float(b))


@settings(max_examples=100, deadline=None)
@given(radicals(), st.integers(min_value=1, max_value=12))
def test_decimal_consistency(a, digits):
    text = rad_to_decimal(a, digits)
    value = Fraction(text)
    step = Fraction(1, 10**digits)
    # truncation toward zero: |text| <= |a| < |text| + step
    assert abs(value) <= abs(a) < abs(value) + step
    assert exact_floor(a) <= a < exact_floor(a) + 1


@settings(max_examples=100, deadline=None)
@given(radicals())
def test_interval_encloses(a):
    lo, hi = a.interval(80)
    assert lo <= a <= hi
