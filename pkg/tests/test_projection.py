import pytest
from hypothesis import given
from hypothesis import strategies as st

from p3109.formats import all_formats, parse_format
from p3109.model import Finite, Inf, NaN, is_valid
from p3109.numerics import NAN, NEG_INF, POS_INF, Dyadic
from p3109.projection import (
    OVF_INF,
    SAT_FINITE,
    SAT_PROPAGATE,
    ProjectionSpec,
    SatMode,
    parse_sat,
    project,
    saturate,
)
from p3109.rounding import DETERMINISTIC_MODES, RD, RNE, RU, FixedEntropy, SR

F8 = parse_format("8p4se")


def test_saturation_examples():
    big = Dyadic(448)
    assert saturate(F8, big, SAT_FINITE) == Dyadic(224)
    assert saturate(F8, big, OVF_INF) is POS_INF
    assert saturate(F8, POS_INF, SAT_PROPAGATE) is POS_INF
    assert saturate(F8, big, SAT_PROPAGATE) == Dyadic(224)
    assert saturate(parse_format("8p4sf"), big, OVF_INF) == Dyadic(240)
    assert saturate(F8, NAN, SAT_FINITE) is NAN


def test_projection_examples():
    assert project(F8, Dyadic(67, -6), ProjectionSpec(RNE, SAT_FINITE)) == Finite(8, -3)
    assert project(F8, Dyadic(448), ProjectionSpec(RD, OVF_INF)) == Inf()
    assert project(F8, Dyadic(224) + Dyadic(1, -10), ProjectionSpec(RD, OVF_INF)) == Finite(14, 4)
    for mode in DETERMINISTIC_MODES:
        for sat in SatMode:
            assert project(F8, NAN, ProjectionSpec(mode, sat)) == NaN()


def test_infinity_into_finite_format():
    f = parse_format("8p4sf")
    assert project(f, POS_INF, ProjectionSpec(RNE, SAT_FINITE)) == Finite(15, 4)
    assert project(f, NEG_INF, ProjectionSpec(RNE, SAT_FINITE)) == Finite(-15, 4)
    assert project(f, POS_INF, ProjectionSpec(RNE, OVF_INF)) == NaN()


def test_unsigned_negative_inputs():
    u = parse_format("8p4ue")
    assert project(u, Dyadic(-3), ProjectionSpec(RNE, SAT_FINITE)) == Finite(0, u.emin_lsb)
    assert project(u, Dyadic(-3), ProjectionSpec(RNE, OVF_INF)) == NaN()
    assert project(u, NEG_INF, ProjectionSpec(RNE, SAT_FINITE)) == Finite(0, u.emin_lsb)
    assert project(u, NEG_INF, ProjectionSpec(RNE, SAT_PROPAGATE)) == NaN()


def test_round_then_overflow():
    # rounds up past M_hi only under RU
    x = Dyadic(224) + Dyadic(1, -10)
    assert project(F8, x, ProjectionSpec(RU, OVF_INF)) == Inf()
    assert project(F8, x, ProjectionSpec(RU, SAT_FINITE)) == Finite(14, 4)


xs = st.builds(Dyadic, st.integers(-(2**14), 2**14), st.integers(-20, 8))


@given(st.sampled_from(all_formats(3, 8)), xs, st.sampled_from(list(SatMode)), st.integers(1, 6), st.integers(0, 63))
def test_projection_is_closed(f, x, sat, k, u):
    for mode in DETERMINISTIC_MODES + (SR(k),):
        v = project(f, x, ProjectionSpec(mode, sat), FixedEntropy(u % 2**k))
        assert is_valid(f, v)


@pytest.mark.parametrize("text, sat", [("satfin", SAT_FINITE), ("SatFinite", SAT_FINITE), ("ovfinf", OVF_INF), ("satpropagate", SAT_PROPAGATE)])
def test_parse_sat(text, sat):
    assert parse_sat(text) is sat


def test_spec_text():
    spec = ProjectionSpec.parse("sr:3/ovfinf")
    assert str(spec) == "sr:3/ovfinf"
    assert ProjectionSpec.parse("ru").sat is SAT_FINITE
    with pytest.raises(ValueError):
        ProjectionSpec.parse("rne/clamp")
