"""Algebraic P3109 values, canonicality, evaluation and value-set encoding."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .formats import Format
from .numerics import NAN, NEG_INF, POS_INF, Dyadic, Special, XReal, msb_exponent


class InvalidValue(ValueError):
    pass


class NotInValueSet(ValueError):
    pass


@dataclass(frozen=True)
class Finite:
    m: int
    e: int

    def __str__(self):
        return f"Finite({self.m}, {self.e})"


@dataclass(frozen=True)
class Inf:
    negative: bool = False

    def __str__(self):
        return "Inf(-)" if self.negative else "Inf(+)"


@dataclass(frozen=True)
class NaN:
    def __str__(self):
        return "NaN"


Value = Union[Finite, Inf, NaN]


def is_bounded(f: Format, m: int, e: int) -> bool:
    return abs(m) < (1 << f.P) and f.emin_lsb <= e


def is_subnormal(f: Format, m: int, e: int) -> bool:
    return is_bounded(f, m, e) and e == f.emin_lsb and abs(m) < (1 << (f.P - 1))


def _top_binade_limit(f: Format):
    """Exclusive bound on |m| at e == emax_lsb, or None when unrestricted.

    One-bit formats (and P=2 unsigned extended) instead have a lowered emax.
    """
    P = f.P
    if P == 1:
        return None
    if f.signed:
        return (1 << P) - 1 if f.extended else None
    if not f.extended:
        return (1 << P) - 1
    return (1 << P) - 2 if P >= 3 else None


def is_normal(f: Format, m: int, e: int) -> bool:
    if not is_bounded(f, m, e):
        return False
    a = abs(m)
    if a < (1 << (f.P - 1)) or e > f.emax_lsb:
        return False
    if e == f.emax_lsb:
        limit = _top_binade_limit(f)
        if limit is not None and a >= limit:
            return False
    return True


def is_canonical(f: Format, m: int, e: int) -> bool:
    return is_normal(f, m, e) or is_subnormal(f, m, e)


def check_value(f: Format, v: Value) -> None:
    """Raise InvalidValue unless ``v`` is a legal value of format ``f``."""
    if isinstance(v, NaN):
        return
    if isinstance(v, Inf):
        if not f.extended:
            raise InvalidValue(f"{f} has no infinities")
        if v.negative and not f.signed:
            raise InvalidValue(f"{f} has no negative infinity")
        return
    if isinstance(v, Finite):
        if not f.signed and v.m < 0:
            raise InvalidValue(f"{f} is unsigned; m={v.m} < 0")
        if not is_canonical(f, v.m, v.e):
            raise InvalidValue(f"({v.m}, {v.e}) is not canonical in {f}")
        return
    raise InvalidValue(f"not a P3109 value: {v!r}")


def is_valid(f: Format, v: Value) -> bool:
    try:
        check_value(f, v)
    except InvalidValue:
        return False
    return True


def negate(v: Value) -> Value:
    if isinstance(v, Finite):
        return Finite(-v.m, v.e)
    if isinstance(v, Inf):
        return Inf(not v.negative)
    return v


def evaluate(f: Format, v: Value) -> XReal:
    """The evaluation map from algebraic values to extended reals."""
    if isinstance(v, Finite):
        return Dyadic(v.m, v.e)
    if isinstance(v, Inf):
        return NEG_INF if v.negative else POS_INF
    return NAN


def encode_value(f: Format, x: XReal) -> Value:
    """Left inverse of :func:`evaluate` on the value set of ``f``."""
    if x is NAN:
        return NaN()
    if isinstance(x, Special):
        v = Inf(x is NEG_INF)
        if not is_valid(f, v):
            raise NotInValueSet(f"{x.value} is not in the value set of {f}")
        return v
    if x.m == 0:
        return Finite(0, f.emin_lsb)
    if msb_exponent(x) >= f.emin:
        e = msb_exponent(x) - f.P + 1
    else:
        e = f.emin_lsb
    if x.e < e:
        raise NotInValueSet(f"{x} needs more than {f.P} significand bits in {f}")
    v = Finite(x.m << (x.e - e), e)
    if not is_valid(f, v):
        raise NotInValueSet(f"{x} is not in the value set of {f}")
    return v


def in_value_set(f: Format, x: XReal) -> bool:
    try:
        encode_value(f, x)
    except NotInValueSet:
        return False
    return True


def value_to_json(v: Value) -> dict:
    if isinstance(v, NaN):
        return {"class": "nan"}
    if isinstance(v, Inf):
        return {"class": "inf", "sign": v.negative}
    return {"class": "finite", "m": str(v.m), "e": v.e}


def value_from_json(obj: dict) -> Value:
    cls = obj["class"]
    if cls == "nan":
        return NaN()
    if cls == "inf":
        return Inf(bool(obj.get("sign", False)))
    if cls == "finite":
        return Finite(int(obj["m"]), int(obj["e"]))
    raise ValueError(f"unknown value class {cls!r}")
