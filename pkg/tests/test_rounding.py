import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from p3109.formats import all_formats, parse_format
from p3109.numerics import Dyadic
from p3109.rounding import (
    DETERMINISTIC_MODES,
    RD,
    RNE,
    RO,
    RU,
    RZ,
    SR,
    EntropySource,
    FixedEntropy,
    NonFiniteInput,
    SequenceEntropy,
    parse_mode,
    rnd_int,
    round_to_precision,
)
from p3109.numerics import POS_INF


def floor_log2(q):
    q = abs(q)
    k = q.numerator.bit_length() - q.denominator.bit_length()
    return k if Fraction(2) ** k <= q else k - 1


def oracle(f, q, mode):
    """Reference rounding on Fractions; no shared code with the library."""
    if q == 0:
        return q
    ce = max(floor_log2(q), f.emin)
    ulp = Fraction(2) ** (ce - f.P + 1)
    lo = math.floor(q / ulp) * ulp
    if lo == q:
        return q
    hi = lo + ulp
    name = mode.name
    if name == "rd":
        return lo
    if name == "ru":
        return hi
    if name == "rz":
        return lo if q > 0 else hi
    if name == "rne" and q - lo != hi - q:
        return lo if q - lo < hi - q else hi

    def even(v):
        if f.P == 1:
            return v == 0 or floor_log2(v) % 2 == 0
        return (v / ulp) % 2 == 0

    want_even = name == "rne"
    return lo if even(lo) == want_even else hi


formats = st.sampled_from(all_formats(3, 8))
reals = st.builds(Dyadic, st.integers(-(2**12), 2**12), st.integers(-16, 8))


@given(formats, reals, st.sampled_from(DETERMINISTIC_MODES))
def test_matches_fraction_oracle(f, x, mode):
    if x < 0 and not f.signed:
        x = -x
    got = round_to_precision(f, x, mode)
    assert got.to_fraction() == oracle(f, x.to_fraction(), mode)


@given(formats, reals, st.integers(1, 8), st.integers(0, 2**8 - 1))
def test_sr_is_faithful(f, x, k, u):
    u %= 2**k
    got = round_to_precision(f, x, SR(k), FixedEntropy(u)).to_fraction()
    assert got in (oracle(f, x.to_fraction(), RD), oracle(f, x.to_fraction(), RU))


def test_rnd_int_examples():
    assert rnd_int(RNE, 0, Dyadic.parse("8.375")) == 8
    assert rnd_int(RO, 0, Dyadic.parse("9.5")) == 9
    assert rnd_int(RD, 0, Dyadic.parse("-2.5")) == -3
    assert rnd_int(RZ, 0, Dyadic.parse("-2.5")) == -2
    assert rnd_int(SR(4), 0, Dyadic.parse("8.25"), FixedEntropy(3)) == 9
    assert rnd_int(SR(4), 0, Dyadic.parse("8.25"), FixedEntropy(4)) == 8


def test_rnd_int_exact_and_ties():
    for mode in DETERMINISTIC_MODES:
        assert rnd_int(mode, 0, Dyadic(7)) == 7
    assert rnd_int(RNE, 0, Dyadic.parse("2.5")) == 2
    assert rnd_int(RNE, 0, Dyadic.parse("3.5")) == 4
    assert rnd_int(RNE, 0, Dyadic.parse("-2.5")) == -2


def test_round_to_precision_examples(f8):
    x = Dyadic(67, -6)
    assert round_to_precision(f8, x, RNE) == Dyadic(1)
    assert round_to_precision(f8, x, RU) == Dyadic(9, -3)
    for mode in DETERMINISTIC_MODES:
        assert round_to_precision(f8, Dyadic(448), mode) == Dyadic(448)


def test_one_bit_tie_uses_exponent_parity():
    f = parse_format("4p1se")
    # 3 sits between 2 = 2^1 and 4 = 2^2
    assert round_to_precision(f, Dyadic(3), RNE) == Dyadic(4)
    assert round_to_precision(f, Dyadic(3), RO) == Dyadic(2)
    assert round_to_precision(f, Dyadic(-3), RNE) == Dyadic(-4)
    # 6 sits between 4 = 2^2 and 8 = 2^3
    assert round_to_precision(f, Dyadic(6), RNE) == Dyadic(4)


def test_tie_against_zero_picks_zero():
    f = parse_format("4p1se")
    half_min = Dyadic(1, f.emin - 1)
    assert round_to_precision(f, half_min, RNE) == Dyadic(0)
    assert round_to_precision(f, half_min, RO) == Dyadic(1, f.emin)


def test_entropy_sources():
    a, b = EntropySource(7), EntropySource(7)
    assert [a.draw(6) for _ in range(20)] == [b.draw(6) for _ in range(20)]
    seq = SequenceEntropy([1, 2, 3])
    assert [seq.draw(4) for _ in range(3)] == [1, 2, 3]
    with pytest.raises(ValueError):
        rnd_int(SR(3), 0, Dyadic.parse("0.5"))


def test_non_finite_rejected(f8):
    with pytest.raises(NonFiniteInput):
        round_to_precision(f8, POS_INF, RNE)


@pytest.mark.parametrize("text", ["rd", "ru", "rz", "rne", "ro", "sr:3"])
def test_parse_mode(text):
    assert str(parse_mode(text)) == text


@pytest.mark.parametrize("text", ["sr", "sr:0", "nearest", "sr:x"])
def test_parse_mode_rejects(text):
    with pytest.raises(ValueError):
        parse_mode(text)
