from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from p3109.numerics import (
    NAN,
    NEG_INF,
    POS_INF,
    Dyadic,
    ZeroInput,
    dy_add,
    dy_cmp,
    dy_sub,
    msb_exponent,
    pow2,
    xr_add,
    xr_neg,
    xr_parse,
    xr_str,
    xr_sub,
)

dyadics = st.builds(Dyadic, st.integers(-(2**70), 2**70), st.integers(-80, 80))


@given(dyadics, dyadics)
def test_arithmetic_matches_fraction(a, b):
    fa, fb = a.to_fraction(), b.to_fraction()
    assert (a + b).to_fraction() == fa + fb
    assert (a - b).to_fraction() == fa - fb
    assert (a * b).to_fraction() == fa * fb
    assert (-a).to_fraction() == -fa
    assert abs(a).to_fraction() == abs(fa)


@given(dyadics, dyadics)
def test_order_matches_fraction(a, b):
    fa, fb = a.to_fraction(), b.to_fraction()
    assert (a < b) == (fa < fb)
    assert (a <= b) == (fa <= fb)
    assert (a == b) == (fa == fb)
    assert dy_cmp(a, b) == (fa > fb) - (fa < fb)


@given(dyadics)
def test_canonical_storage(a):
    if a.m == 0:
        assert a.e == 0
    else:
        assert a.m % 2 == 1
    # equal values hash alike regardless of how they were built
    assert hash(Dyadic(a.m * 4, a.e - 2)) == hash(a)


@given(dyadics)
def test_decimal_is_exact(a):
    assert Fraction(a.decimal()) == a.to_fraction()
    assert Dyadic.parse(a.decimal()) == a


@given(dyadics.filter(lambda d: d.m != 0))
def test_msb_is_floor_log2(a):
    k = msb_exponent(a)
    q = abs(a.to_fraction())
    assert Fraction(2) ** k <= q < Fraction(2) ** (k + 1)


def test_examples():
    assert dy_add(Dyadic(1, 0), Dyadic(3, -6)) == Dyadic(67, -6)
    a = Dyadic(14, 4)
    assert a + Dyadic(0) == a
    assert dy_sub(a, a) == Dyadic(0)
    assert msb_exponent(Dyadic(14, 4)) == 7
    assert msb_exponent(Dyadic(1, 0)) == 0
    assert msb_exponent(Dyadic(3, -6)) == -5
    assert xr_add(Dyadic(1), pow2(-10)) == Dyadic(1025, -10)
    with pytest.raises(ZeroInput):
        msb_exponent(Dyadic(0))


def test_immutable():
    a = Dyadic(3, 1)
    with pytest.raises(AttributeError):
        a.m = 5


@pytest.mark.parametrize(
    "text, value",
    [("3*2^-6", Fraction(3, 64)), ("0.046875", Fraction(3, 64)), ("-12", -12), ("5*2^3", 40)],
)
def test_parse(text, value):
    assert Dyadic.parse(text).to_fraction() == value


@pytest.mark.parametrize("text", ["1e3", "0.1", "abc", "1.5.2", "2**3"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        Dyadic.parse(text)


FIVE = Dyadic(5)
# rows: left operand, columns: right operand (finite, +inf, -inf, nan)
TRUTH = {
    (FIVE, FIVE): Dyadic(10),
    (FIVE, POS_INF): POS_INF,
    (FIVE, NEG_INF): NEG_INF,
    (FIVE, NAN): NAN,
    (POS_INF, FIVE): POS_INF,
    (POS_INF, POS_INF): POS_INF,
    (POS_INF, NEG_INF): NAN,
    (POS_INF, NAN): NAN,
    (NEG_INF, FIVE): NEG_INF,
    (NEG_INF, POS_INF): NAN,
    (NEG_INF, NEG_INF): NEG_INF,
    (NEG_INF, NAN): NAN,
    (NAN, FIVE): NAN,
    (NAN, POS_INF): NAN,
    (NAN, NEG_INF): NAN,
    (NAN, NAN): NAN,
}


@pytest.mark.parametrize("a, b", list(TRUTH))
def test_extended_addition_table(a, b):
    assert xr_add(a, b) == TRUTH[(a, b)]


def test_extended_negation_and_subtraction():
    assert xr_neg(POS_INF) is NEG_INF
    assert xr_neg(NAN) is NAN
    assert xr_sub(POS_INF, POS_INF) is NAN
    assert xr_sub(FIVE, NEG_INF) is POS_INF


@pytest.mark.parametrize("text", ["+inf", "-inf", "nan", "3.25", "-0.5"])
def test_xr_roundtrip(text):
    assert xr_str(xr_parse(text)) == text
