"""Projection outcomes grouped over a sweep of specs and entropy draws.

Every draw of every stochastic mode goes through :func:`rnd_int`; only
identical results are merged, each keeping one representative label per
mode family so failures stay reproducible.
"""

from __future__ import annotations

from ..formats import Format
from ..model import encode_value
from ..numerics import Dyadic
from ..projection import SatMode, saturate
from ..rounding import (
    DETERMINISTIC_MODES,
    RD,
    RU,
    SR,
    FixedEntropy,
    renormalize,
    rnd_int,
    round_to_precision,
    scaled_significand,
)

SR_BITS = tuple(range(1, 7))

# round-to-nearest with ties broken downward / upward; only used as extra
# members of the nearest family
RN_TIES_DOWN = "rn-td"
RN_TIES_UP = "rn-tu"
NEAREST_FAMILIES = frozenset({"rne", RN_TIES_DOWN, RN_TIES_UP})


class Sweeper:
    def __init__(self, f: Format, sats=tuple(SatMode), sr_bits=SR_BITS, extra_nearest=False):
        self.f = f
        self.sats = tuple(sats)
        self.sr_bits = tuple(sr_bits)
        self.extra_nearest = extra_nearest
        self._rounded = {}
        self._projected = {}
        self._encoded = {}

    def rounded(self, x):
        """``{y: {family: label}}`` for every rounding of ``x``."""
        hit = self._rounded.get(x)
        if hit is not None:
            return hit
        f = self.f
        out = {}
        if not isinstance(x, Dyadic) or x.m == 0:
            fams = {str(m): str(m) for m in DETERMINISTIC_MODES}
            fams.update({f"sr:{k}": f"sr:{k}@0" for k in self.sr_bits})
            out[x] = fams
        else:
            for mode in DETERMINISTIC_MODES:
                y = round_to_precision(f, x, mode)
                out.setdefault(y, {})[str(mode)] = str(mode)
            ce, scale, s = scaled_significand(f, x)
            for k in self.sr_bits:
                mode = SR(k)
                seen = {}
                for u in range(1 << k):
                    m = rnd_int(mode, ce, s, FixedEntropy(u), precision=f.P)
                    seen.setdefault(m, u)
                for m, u in seen.items():
                    y = renormalize(f, m, scale)
                    out.setdefault(y, {}).setdefault(f"sr:{k}", f"sr:{k}@{u}")
            if self.extra_nearest:
                lo = round_to_precision(f, x, RD)
                hi = round_to_precision(f, x, RU)
                if lo == hi:
                    picks = {RN_TIES_DOWN: lo, RN_TIES_UP: lo}
                else:
                    dl, dh = x - lo, hi - x
                    if dl < dh:
                        picks = {RN_TIES_DOWN: lo, RN_TIES_UP: lo}
                    elif dh < dl:
                        picks = {RN_TIES_DOWN: hi, RN_TIES_UP: hi}
                    else:
                        picks = {RN_TIES_DOWN: lo, RN_TIES_UP: hi}
                for fam, y in picks.items():
                    out.setdefault(y, {})[fam] = fam
        self._rounded[x] = out
        return out

    def encoded(self, z):
        v = self._encoded.get(z)
        if v is None:
            v = encode_value(self.f, z)
            self._encoded[z] = v
        return v

    def projected(self, x):
        """``{result: {family: label}}`` over all rounding modes and sats.

        Results are extended reals that have been through ``encode_value``.
        """
        hit = self._projected.get(x)
        if hit is not None:
            return hit
        out = {}
        for y, fams in self.rounded(x).items():
            for sat in self.sats:
                z = saturate(self.f, y, sat)
                self.encoded(z)
                slot = out.setdefault(z, {})
                for fam, label in fams.items():
                    slot.setdefault(fam, f"{label}/{sat}")
        self._projected[x] = out
        return out
