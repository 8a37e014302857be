import pytest

from p3109.codec import (
    MUTATIONS,
    Codec,
    OutOfRange,
    decode,
    decode_fin,
    decode_reference,
    encode_bits,
    enumerate_format,
)
from p3109.formats import all_formats, parse_format
from p3109.model import Finite, Inf, InvalidValue, NaN, negate
from p3109.numerics import POS_INF, Dyadic


def test_special_slots(f8):
    assert decode(f8, 128) == NaN()
    assert decode(f8, 127) == Inf()
    assert decode(f8, 255) == Inf(True)
    u = parse_format("8p4ue")
    assert decode(u, 254) == Inf()
    assert encode_bits(u, NaN()) == 255


def test_decode_examples(f8):
    assert decode(f8, 126) == Finite(14, 4)
    assert decode(f8, 0) == Finite(0, -10)
    v = decode(parse_format("4p2se"), 5)
    assert v == Finite(3, -1)
    assert decode_fin(f8, 126) == Finite(14, 4)


def test_encode_examples(f8):
    assert encode_bits(f8, Finite(14, 4)) == 126
    assert encode_bits(f8, Finite(-3, -10)) == 131
    with pytest.raises(InvalidValue):
        encode_bits(f8, Finite(15, 4))


def test_out_of_range(f8):
    with pytest.raises(OutOfRange):
        decode(f8, 256)
    with pytest.raises(OutOfRange):
        decode(f8, -1)


def test_3p1ue_table():
    rows = enumerate_format(parse_format("3p1ue"))
    values = [x for _, _, x in rows]
    expected = [Dyadic(0), Dyadic(1, -3), Dyadic(1, -2), Dyadic(1, -1), Dyadic(1), Dyadic(2)]
    assert values[:6] == expected
    assert values[6] is POS_INF
    assert isinstance(rows[7][1], NaN)


def test_4p2se_first_half():
    f = parse_format("4p2se")
    got = [x for _, _, x in enumerate_format(f)][:8]
    want = ["0", "0.25", "0.5", "0.75", "1", "1.5", "2"]
    assert [str(x) for x in got[:7]] == want
    assert got[7] is POS_INF


@pytest.mark.parametrize("f", all_formats(3, 8), ids=str)
def test_roundtrip_and_reference(f):
    for n in range(2**f.K):
        v = decode(f, n)
        assert encode_bits(f, v) == n
        assert decode_reference(f, n) == v


@pytest.mark.parametrize("f", all_formats(3, 8, signed=True), ids=str)
def test_sign_reduction(f):
    half = 2 ** (f.K - 1)
    for n in range(1, half):
        assert negate(decode(f, n)) == decode(f, n + half)


@pytest.mark.parametrize("mutation", MUTATIONS)
def test_mutations_break_something(mutation):
    broken = 0
    for f in all_formats(3, 6):
        c = Codec(f, mutation)
        broken += sum(c.decode(n) != decode_reference(f, n) for n in range(2**f.K))
    assert broken > 0


def test_unknown_mutation(f8):
    with pytest.raises(ValueError):
        Codec(f8, "sign")
