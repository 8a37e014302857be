"""Addition and subtraction as projections of exact results, plus the
FastTwoSum and ExtractScalar error-free transformations."""

from __future__ import annotations

from dataclasses import dataclass

from .formats import Format
from .model import Finite, Value, check_value, evaluate, value_to_json
from .numerics import Dyadic, XReal, xr_add, xr_str, xr_sub
from .projection import SAT_FINITE, ProjectionSpec, SatMode, project
from .rounding import RNE


class PreconditionViolation(ValueError):
    pass


def fp_add(f: Format, a: Value, b: Value, spec=ProjectionSpec(), ent=None) -> Value:
    return project(f, xr_add(evaluate(f, a), evaluate(f, b)), spec, ent)


def fp_sub(f: Format, a: Value, b: Value, spec=ProjectionSpec(), ent=None) -> Value:
    return project(f, xr_sub(evaluate(f, a), evaluate(f, b)), spec, ent)


@dataclass(frozen=True)
class FtsTrace:
    a: Value
    b: Value
    s: Value
    z: Value
    t: Value
    exact_sum: XReal
    delta: XReal
    specs: tuple

    def to_json(self) -> dict:
        return {
            "a": value_to_json(self.a),
            "b": value_to_json(self.b),
            "s": value_to_json(self.s),
            "z": value_to_json(self.z),
            "t": value_to_json(self.t),
            "exact_sum": xr_str(self.exact_sum),
            "delta": xr_str(self.delta),
            "specs": [str(sp) for sp in self.specs],
        }


def _require_signed_finite(f: Format, *values):
    if not f.signed:
        raise PreconditionViolation(f"{f} is unsigned; the algorithm needs a signed format")
    for v in values:
        if not isinstance(v, Finite):
            raise PreconditionViolation(f"operand {v} is not finite")
        check_value(f, v)


def fast_two_sum(
    f: Format,
    a: Value,
    b: Value,
    spec1=ProjectionSpec(),
    spec2=ProjectionSpec(),
    spec3=ProjectionSpec(),
    ent=None,
) -> FtsTrace:
    """s = a + b, z = s - a, t = b - z; each step projected on its own spec."""
    _require_signed_finite(f, a, b)
    av, bv = evaluate(f, a), evaluate(f, b)
    exact = av + bv
    s = project(f, exact, spec1, ent)
    z = project(f, xr_sub(evaluate(f, s), av), spec2, ent)
    t = project(f, xr_sub(bv, evaluate(f, z)), spec3, ent)
    delta = xr_sub(exact, evaluate(f, s))
    return FtsTrace(a, b, s, z, t, exact, delta, (spec1, spec2, spec3))


@dataclass(frozen=True)
class EsTrace:
    sigma: Value
    x: Value
    s: Value
    x_h: Value
    x_l: Value
    i: int
    j: object
    sats: tuple

    def to_json(self) -> dict:
        return {
            "sigma": value_to_json(self.sigma),
            "x": value_to_json(self.x),
            "s": value_to_json(self.s),
            "x_h": value_to_json(self.x_h),
            "x_l": value_to_json(self.x_l),
            "i": self.i,
            "j": self.j,
            "sats": [str(sat) for sat in self.sats],
        }


def power_of_two_exponent(x: Dyadic):
    """``i`` when ``x == 2**i``, else None."""
    if x.m == 1:
        return x.e
    return None


def extract_scalar(
    f: Format,
    sigma: Value,
    x: Value,
    sat1: SatMode = SAT_FINITE,
    sat2: SatMode = SAT_FINITE,
    sat3: SatMode = SAT_FINITE,
    j=None,
) -> EsTrace:
    """Split ``x`` against ``sigma = 2**i`` into ``x_h + x_l`` under RNE.

    ``j`` is carried through to the trace for checkers; the algorithm
    never reads it.
    """
    _require_signed_finite(f, sigma, x)
    sv, xv = evaluate(f, sigma), evaluate(f, x)
    i = power_of_two_exponent(sv)
    if i is None:
        raise PreconditionViolation(f"sigma = {sv} is not a power of two")
    s = project(f, sv + xv, ProjectionSpec(RNE, sat1))
    x_h = project(f, xr_sub(evaluate(f, s), sv), ProjectionSpec(RNE, sat2))
    x_l = project(f, xr_sub(xv, evaluate(f, x_h)), ProjectionSpec(RNE, sat3))
    return EsTrace(sigma, x, s, x_h, x_l, i, j, (sat1, sat2, sat3))


def extract_scalar_conditions(f: Format, trace: EsTrace, j: int) -> dict:
    """Evaluate conditions (a)-(d) on a trace; values are booleans."""
    sv = evaluate(f, trace.sigma)
    xv = evaluate(f, trace.x)
    xh = evaluate(f, trace.x_h)
    xl = evaluate(f, trace.x_l)
    if not (isinstance(xh, Dyadic) and isinstance(xl, Dyadic)):
        return {"a": False, "b": False, "c": False, "d": False}
    unit = sv.scale(-f.P)
    return {
        "a": xh + xl == xv,
        "b": abs(xl) <= unit,
        "c": xh.is_zero() or Dyadic(xh.m, xh.e - unit.e).is_integer(),
        "d": abs(xh) <= sv.scale(-j),
    }

