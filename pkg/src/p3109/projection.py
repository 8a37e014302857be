"""Saturation and the Projection pipeline (round, saturate, encode)."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .formats import Format
from .model import Value, encode_value
from .numerics import NAN, NEG_INF, POS_INF, Dyadic, XReal
from .rounding import RNE, RoundingMode, parse_mode, round_to_precision


class SatMode(enum.Enum):
    SAT_FINITE = "satfin"
    OVF_INF = "ovfinf"
    SAT_PROPAGATE = "satprop"

    def __str__(self):
        return self.value


SAT_FINITE = SatMode.SAT_FINITE
OVF_INF = SatMode.OVF_INF
SAT_PROPAGATE = SatMode.SAT_PROPAGATE

_SAT_ALIASES = {
    "satfin": SAT_FINITE,
    "satfinite": SAT_FINITE,
    "ovfinf": OVF_INF,
    "satprop": SAT_PROPAGATE,
    "satpropagate": SAT_PROPAGATE,
}


def parse_sat(text: str) -> SatMode:
    try:
        return _SAT_ALIASES[text.strip().lower()]
    except KeyError:
        raise ValueError(f"unknown saturation mode {text!r}") from None


@dataclass(frozen=True)
class ProjectionSpec:
    rnd: RoundingMode = RNE
    sat: SatMode = SAT_FINITE

    def __str__(self):
        return f"{self.rnd}/{self.sat}"

    @classmethod
    def parse(cls, text: str) -> "ProjectionSpec":
        rnd, _, sat = text.partition("/")
        return cls(parse_mode(rnd), parse_sat(sat or "satfin"))


def _overflow_high(f: Format, sat: SatMode, from_infinity: bool) -> XReal:
    if sat is SAT_FINITE:
        return f.M_hi
    if from_infinity:
        # no infinity to propagate into a finite-domain format
        return POS_INF if f.extended else NAN
    if sat is SAT_PROPAGATE:
        return f.M_hi
    return POS_INF if f.extended else f.M_hi


def _overflow_low(f: Format, sat: SatMode, from_infinity: bool) -> XReal:
    if not f.signed:
        # negative input to an unsigned format: clamp to zero unless the
        # mode insists on overflowing
        return f.M_lo if sat is not OVF_INF else NAN
    if sat is SAT_FINITE:
        return f.M_lo
    if from_infinity:
        return NEG_INF if f.extended else NAN
    if sat is SAT_PROPAGATE:
        return f.M_lo
    return NEG_INF if f.extended else f.M_lo


def saturate(f: Format, y: XReal, sat: SatMode) -> XReal:
    if y is NAN:
        return NAN
    if y is POS_INF:
        return _overflow_high(f, sat, True)
    if y is NEG_INF:
        if not f.signed and sat is SAT_PROPAGATE:
            return NAN
        return _overflow_low(f, sat, True)
    if y > f.M_hi:
        return _overflow_high(f, sat, False)
    if y < f.M_lo:
        return _overflow_low(f, sat, False)
    return y


def project(f: Format, x: XReal, spec: ProjectionSpec = ProjectionSpec(), ent=None) -> Value:
    if x is NAN:
        return encode_value(f, NAN)
    if isinstance(x, Dyadic):
        x = round_to_precision(f, x, spec.rnd, ent)
    return encode_value(f, saturate(f, x, spec.sat))
