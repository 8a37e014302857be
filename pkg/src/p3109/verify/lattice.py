"""Brute-force value-set oracles built from the enumerated value set."""

from __future__ import annotations

import bisect
from functools import lru_cache

from ..codec import enumerate_format
from ..formats import Format
from ..numerics import NEG_INF, POS_INF, Dyadic, pow2


class ValueLattice:
    """Sorted finite values of a format plus its representable infinities."""

    def __init__(self, f: Format, finite, has_pos_inf: bool, has_neg_inf: bool):
        self.f = f
        self.finite = finite
        self.members = frozenset(finite)
        self.has_pos_inf = has_pos_inf
        self.has_neg_inf = has_neg_inf

    @classmethod
    def build(cls, f: Format) -> "ValueLattice":
        finite = set()
        pos = neg = False
        for _, _, x in enumerate_format(f):
            if isinstance(x, Dyadic):
                finite.add(x)
            elif x is POS_INF:
                pos = True
            elif x is NEG_INF:
                neg = True
        return cls(f, sorted(finite), pos, neg)

    def __len__(self):
        return len(self.finite)

    def __contains__(self, x):
        if x is POS_INF:
            return self.has_pos_inf
        if x is NEG_INF:
            return self.has_neg_inf
        return x in self.members

    def pred(self, x: Dyadic):
        """Largest member strictly below ``x``, None if there is none."""
        i = bisect.bisect_left(self.finite, x)
        if i > 0:
            return self.finite[i - 1]
        return NEG_INF if self.has_neg_inf else None

    def succ(self, x: Dyadic):
        i = bisect.bisect_right(self.finite, x)
        if i < len(self.finite):
            return self.finite[i]
        return POS_INF if self.has_pos_inf else None

    def faithful(self, x: Dyadic) -> set:
        """Allowed results of a faithful rounding of ``x`` into the value set."""
        if x in self.members:
            return {x}
        return {v for v in (self.pred(x), self.succ(x)) if v is not None}

    def nearest_distance(self, x: Dyadic) -> Dyadic:
        best = None
        for v in (self.pred(x), self.succ(x), x if x in self.members else None):
            if isinstance(v, Dyadic):
                d = abs(v - x)
                if best is None or d < best:
                    best = d
        return best


@lru_cache(maxsize=None)
def lattice_for(f: Format) -> ValueLattice:
    return ValueLattice.build(f)


def pred(f: Format, x: Dyadic):
    return lattice_for(f).pred(x)


def succ(f: Format, x: Dyadic):
    return lattice_for(f).succ(x)


def unbounded_grid(f: Format, extra_binades: int = 2):
    """Finite values plus the P-bit grid continued past the finite range."""
    pts = set(lattice_for(f).finite)
    P = f.P
    top = f.emax
    for e_msb in range(top, top + extra_binades + 1):
        for m in range(1 << (P - 1), 1 << P):
            v = Dyadic(m, e_msb - P + 1)
            if v > f.M_hi:
                pts.add(v)
                if f.signed:
                    pts.add(-v)
    return sorted(pts)


@lru_cache(maxsize=None)
def midpoint_lattice(f: Format):
    """Test points covering every rounding decision region.

    Every grid point, every midpoint between neighbours, midpoints offset
    by a quarter gap either way, and probes past the finite range.
    """
    grid = unbounded_grid(f)
    pts = set(grid)
    for lo, hi in zip(grid, grid[1:]):
        gap = hi - lo
        quarter = gap.scale(-2)
        mid = lo + gap.scale(-1)
        pts.update((mid, mid - quarter, mid + quarter))
    ulp = pow2(f.emax_lsb)
    far = (f.M_hi + ulp.scale(-1), f.M_hi.scale(1), f.M_hi.scale(2) + ulp.scale(-2))
    pts.update(far)
    if f.signed:
        pts.update(-v for v in far)
    # just below the smallest subnormal, on both sides of zero
    tiny = pow2(f.emin_lsb - 2)
    pts.add(tiny)
    if f.signed:
        pts.add(-tiny)
    return sorted(pts)
