"""Rounding operators and RoundToPrecision.

An integer rounder has the signature ``(e, s) -> int`` where ``s`` is the
exact scaled significand and ``e`` its canonical (MSB) exponent.  The
exponent is always passed through: for precision-1 formats the parity
used by RNE and RO is the parity of the exponent, not of the significand.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .formats import Format
from .numerics import Dyadic, msb_exponent

_MODE_NAMES = ("rd", "ru", "rz", "rne", "ro", "sr")


class NonFiniteInput(ValueError):
    pass


@dataclass(frozen=True)
class RoundingMode:
    name: str
    bits: int = 0

    def __post_init__(self):
        if self.name not in _MODE_NAMES:
            raise ValueError(f"unknown rounding mode {self.name!r}")
        if self.name == "sr":
            if not isinstance(self.bits, int) or self.bits < 1:
                raise ValueError("stochastic rounding needs at least one entropy bit")
        elif self.bits:
            raise ValueError(f"{self.name} takes no entropy bits")

    @property
    def stochastic(self) -> bool:
        return self.name == "sr"

    @property
    def monotonic(self) -> bool:
        return self.name != "sr"

    def __str__(self):
        return f"sr:{self.bits}" if self.stochastic else self.name


RD = RoundingMode("rd")
RU = RoundingMode("ru")
RZ = RoundingMode("rz")
RNE = RoundingMode("rne")
RO = RoundingMode("ro")


def SR(k: int) -> RoundingMode:
    return RoundingMode("sr", k)


DETERMINISTIC_MODES = (RD, RU, RZ, RNE, RO)


def parse_mode(text: str) -> RoundingMode:
    t = text.strip().lower()
    if t.startswith("sr"):
        _, _, k = t.partition(":")
        if not k:
            raise ValueError("stochastic rounding is written sr:<k>, e.g. sr:4")
        return SR(int(k))
    return RoundingMode(t)


class EntropySource:
    """Supplies ``k`` uniform random bits per rounding event.

    Deterministic for a given seed.
    """

    def __init__(self, seed=None):
        self._rng = random.Random(seed)

    def draw(self, k: int) -> int:
        return self._rng.getrandbits(k)


class FixedEntropy(EntropySource):
    """Returns the same draw ``u`` (masked to ``k`` bits) every time."""

    def __init__(self, u: int):
        self.u = u

    def draw(self, k: int) -> int:
        return self.u & ((1 << k) - 1)


class SequenceEntropy(EntropySource):
    def __init__(self, draws):
        self._draws = list(draws)
        self._i = 0

    def draw(self, k: int) -> int:
        u = self._draws[self._i]
        self._i += 1
        return u & ((1 << k) - 1)


def _split(s):
    """``s -> (floor(s), remainder numerator, denominator)``."""
    if isinstance(s, Dyadic):
        num, den = s.as_ratio()
    elif isinstance(s, int):
        return s, 0, 1
    else:
        s = Fraction(s)
        num, den = s.numerator, s.denominator
    fl = num // den
    return fl, num - fl * den, den


def rnd_int(mode: RoundingMode, e: int, s, ent=None, precision=None) -> int:
    """Round the scaled significand ``s`` to an integer.

    ``e`` is the canonical exponent of the value being rounded.  Pass
    ``precision=1`` for one-bit formats so that ties (RNE) and odd
    selection (RO) use exponent parity.
    """
    fl, rem, den = _split(s)
    if rem == 0:
        return fl
    name = mode.name
    if name == "rd":
        return fl
    if name == "ru":
        return fl + 1
    if name == "rz":
        return fl + 1 if fl < 0 else fl
    if name == "sr":
        if ent is None:
            raise ValueError("stochastic rounding needs an entropy source")
        k = mode.bits
        threshold = (rem << k) // den
        return fl + 1 if ent.draw(k) < threshold else fl
    if name == "rne":
        twice = 2 * rem
        if twice < den:
            return fl
        if twice > den:
            return fl + 1
        return _parity_pick(fl, e, precision, want_even=True)
    # round to odd
    return _parity_pick(fl, e, precision, want_even=False)


def _parity_pick(fl: int, e: int, precision, want_even: bool) -> int:
    lo, hi = fl, fl + 1
    if precision == 1 and lo != 0 and hi != 0:
        # one-bit significands: |lo| and |hi| are 1 and 2 in some order; the
        # magnitude-2 neighbour renormalizes to exponent e + 1
        lo_exp = e if abs(lo) == 1 else e + 1
        lo_even = lo_exp % 2 == 0
    else:
        lo_even = lo % 2 == 0
    return lo if lo_even == want_even else hi


def scaled_significand(f: Format, x: Dyadic):
    """``(canonical exponent, LSB scale, x / 2**scale)`` for nonzero ``x``."""
    ce = max(msb_exponent(x), f.emin)
    scale = ce - f.P + 1
    return ce, scale, Dyadic(x.m, x.e - scale)


def renormalize(f: Format, m: int, scale: int) -> Dyadic:
    if abs(m) == 1 << f.P:
        return Dyadic(m >> 1, scale + 1)
    return Dyadic(m, scale)


def round_to_precision(f: Format, x, mode: RoundingMode, ent=None) -> Dyadic:
    """Round ``x`` to ``P`` significant bits with an exponent unbounded above.

    Values below ``2**emin`` land on the subnormal grid at ``emin_lsb``.
    """
    if not isinstance(x, Dyadic):
        raise NonFiniteInput(f"cannot round {x!r}")
    if x.m == 0:
        return x
    ce, scale, s = scaled_significand(f, x)
    m = rnd_int(mode, ce, s, ent, precision=f.P)
    return renormalize(f, m, scale)
