"""Exhaustive verification suites, one per lemma or theorem being re-checked.

Each suite walks complete format enumerations (or a midpoint lattice for
the rounding and projection properties) and records every violation with
enough context to replay it.
"""

from __future__ import annotations

import bisect
import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from ..algorithms import extract_scalar, extract_scalar_conditions
from ..codec import codec_for, decode_reference
from ..formats import Format, all_formats
from ..model import (
    Finite,
    Inf,
    InvalidValue,
    NaN,
    NotInValueSet,
    encode_value,
    evaluate,
    is_canonical,
    is_valid,
    negate,
    value_to_json,
)
from ..numerics import NEG_INF, POS_INF, NAN, Dyadic, Special, is_finite, msb_exponent, pow2, xr_str, xr_sub
from ..projection import ProjectionSpec, SatMode, project, saturate
from ..rounding import DETERMINISTIC_MODES, RD, RNE, RO, RU, round_to_precision
from .lattice import lattice_for, midpoint_lattice, unbounded_grid
from .report import Report
from .sweep import NEAREST_FAMILIES, Sweeper


@dataclass
class Context:
    formats: list
    mutation: object = None
    seed: int = 0
    sample: object = None
    jobs: int = 1


def _vj(v):
    return value_to_json(v)


def _fmt_in(f, **kw):
    out = {"format": f.name}
    for k, v in kw.items():
        out[k] = xr_str(v) if isinstance(v, (Dyadic, Special)) else v
    return out


@lru_cache(maxsize=None)
def model_values(f: Format):
    """Every legal algebraic value, found by brute force over (m, e)."""
    vals = [NaN()]
    if f.extended:
        vals.append(Inf(False))
        if f.signed:
            vals.append(Inf(True))
    lo = -(1 << f.P) + 1 if f.signed else 0
    for e in range(f.emin_lsb, f.emax_lsb + 1):
        for m in range(lo, 1 << f.P):
            if is_canonical(f, m, e):
                vals.append(Finite(m, e))
    return tuple(vals)


def _canonical_exponent(f: Format, x: Dyadic) -> int:
    if x.m == 0:
        return f.emin
    return max(msb_exponent(x), f.emin)


# ---------------------------------------------------------------- formats


def suite_emax_consistency(rep: Report, ctx: Context):
    for f in ctx.formats:
        c = codec_for(f, ctx.mutation)
        v = c.decode(f.n_fmax)
        ok = isinstance(v, Finite) and v.m != 0
        rep.check(ok, _fmt_in(f, n=f.n_fmax), "n_fmax decodes to a nonzero finite", _vj(v))
        if not ok:
            continue
        msb = v.e + abs(v.m).bit_length() - 1
        rep.check(msb == f.emax, _fmt_in(f, emax=f.emax), "emax == msb(decode(n_fmax))", {"msb": msb})
        rep.check(
            evaluate(f, v) == f.M_hi,
            _fmt_in(f, M_hi=f.M_hi),
            "M_hi == eval(decode(n_fmax))",
            _vj(v),
        )
        top = 1 << (f.K - 1) if f.signed else (1 << f.K) - 1
        for n in range(f.n_fmax + 1, top + 1):
            w = c.decode(n)
            rep.check(
                not isinstance(w, Finite),
                _fmt_in(f, n=n),
                "encodings above n_fmax in the non-negative region are special",
                _vj(w),
            )


_RESERVED_COUNT = {(True, False): 1, (False, False): 1, (True, True): 3, (False, True): 2}


def suite_special_encodings(rep: Report, ctx: Context):
    for f in ctx.formats:
        c = codec_for(f, ctx.mutation)
        table = {f.nan_code: NaN()}
        if f.pos_inf_code is not None:
            table[f.pos_inf_code] = Inf(False)
        if f.neg_inf_code is not None:
            table[f.neg_inf_code] = Inf(True)
        rep.check(
            len(table) == _RESERVED_COUNT[(f.signed, f.extended)],
            _fmt_in(f),
            "reserved encoding count",
            {"count": len(table)},
        )
        for n in range(1 << f.K):
            v = c.decode(n)
            expected = table.get(n)
            if expected is None:
                rep.check(isinstance(v, Finite), _fmt_in(f, n=n), "unreserved encoding is finite", _vj(v))
            else:
                rep.check(v == expected, _fmt_in(f, n=n), "reserved encoding decodes per table", _vj(v))


def suite_emax_errata(rep: Report, ctx: Context):
    for f in ctx.formats:
        if f.signed or not f.extended:
            continue
        c = codec_for(f, ctx.mutation)
        W, B, K = f.W, f.B, f.K
        interim = (1 << W) - 1 - B
        if f.P == 1:
            rep.check(f.emax == (1 << W) - 3 - B, _fmt_in(f, emax=f.emax), "emax == 2^W-3-B for P=1")
        if f.P in (1, 2):
            if f.P == 2:
                rep.check(f.emax == (1 << W) - 2 - B, _fmt_in(f, emax=f.emax), "emax == 2^W-2-B for P=2")
            rep.check(f.emax != interim, _fmt_in(f, emax=f.emax), "emax differs from interim 2^W-1-B")
            v = c.decode(f.n_fmax)
            if isinstance(v, Finite) and v.m:
                msb = v.e + abs(v.m).bit_length() - 1
                rep.check(msb != interim, _fmt_in(f), "max finite exponent is not the interim value")
        n_inf = (1 << K) - 2
        rep.check(c.decode(n_inf) == Inf(False), _fmt_in(f, n=n_inf), "+inf decodes from 2^K-2")
        try:
            got = c.encode_bits(Inf(False))
        except InvalidValue as exc:
            got = str(exc)
        rep.check(got == n_inf, _fmt_in(f), "+inf encodes as 2^K-2", {"got": got})
        wrong = (1 << (K - 1)) - 2
        rep.check(
            not isinstance(c.decode(wrong), Inf),
            _fmt_in(f, n=wrong),
            "interim slot 2^(K-1)-2 is not infinity",
        )


# ---------------------------------------------------------------- codec / model


def suite_triangle(rep: Report, ctx: Context):
    for f in ctx.formats:
        c = codec_for(f, ctx.mutation)
        decoded = [c.decode(n) for n in range(1 << f.K)]
        seen = {}
        for n, v in enumerate(decoded):
            first = seen.setdefault(v, n)
            rep.check(first == n, _fmt_in(f, n=n, other=first), "decode is injective", _vj(v))
            try:
                back = c.encode_bits(v)
            except InvalidValue as exc:
                back = f"invalid: {exc}"
            rep.check(back == n, _fmt_in(f, n=n), "encode_bits(decode(n)) == n", {"value": _vj(v), "back": back})
        values = model_values(f)
        rep.check(
            len(values) == 1 << f.K,
            _fmt_in(f),
            "value count equals 2^K",
            {"values": len(values)},
        )
        images = set(decoded)
        evals = {}
        for v in values:
            rep.check(v in images, _fmt_in(f), "every value has an encoding", _vj(v))
            try:
                n = c.encode_bits(v)
                back = c.decode(n)
            except (InvalidValue, ValueError) as exc:
                back = str(exc)
            rep.check(back == v, _fmt_in(f), "decode(encode_bits(v)) == v", {"value": _vj(v)})
            x = evaluate(f, v)
            prev = evals.setdefault(x, v)
            rep.check(prev == v, _fmt_in(f, x=x), "eval is injective", {"a": _vj(prev), "b": _vj(v)})
            try:
                again = encode_value(f, x)
            except NotInValueSet as exc:
                again = str(exc)
            rep.check(again == v, _fmt_in(f, x=x), "encode_value(eval(v)) == v", {"value": _vj(v)})
        # decoded values must themselves be legal (catches a shifted bias)
        for n, v in enumerate(decoded):
            rep.check(is_valid(f, v), _fmt_in(f, n=n), "decoded value is legal", _vj(v))


def suite_differential(rep: Report, ctx: Context):
    for f in ctx.formats:
        c = codec_for(f, ctx.mutation)
        for n in range(1 << f.K):
            a, b = c.decode(n), decode_reference(f, n)
            rep.check(a == b, _fmt_in(f, n=n), "decode == decode_reference", {"decode": _vj(a), "reference": _vj(b)})


def suite_reduction(rep: Report, ctx: Context):
    for f in ctx.formats:
        if not f.signed:
            continue
        c = codec_for(f, ctx.mutation)
        half = 1 << (f.K - 1)
        for n in range(1, half):
            a, b = negate(c.decode(n)), c.decode(n + half)
            rep.check(a == b, _fmt_in(f, n=n), "-decode(n) == decode(n + 2^(K-1))", {"neg": _vj(a), "hi": _vj(b)})


def suite_region_disjointness(rep: Report, ctx: Context):
    for f in ctx.formats:
        c = codec_for(f, ctx.mutation)
        specials = set(f.reserved_codes().values())
        half = 1 << (f.P - 1)
        sign_bit = 1 << (f.K - 1)
        regions = {}
        for n in range(1 << f.K):
            v = c.decode(n)
            if n in specials:
                region = "special"
                ok = not isinstance(v, Finite)
            else:
                negative = f.signed and n >= sign_bit
                body = n - sign_bit if negative else n
                sub = body < half
                region = ("neg-" if negative else "pos-") + ("subnormal" if sub else "normal")
                ok = isinstance(v, Finite)
                if ok:
                    a = abs(v.m)
                    ok = (a < half) == sub and (v.m < 0) == negative
            rep.check(ok, _fmt_in(f, n=n), f"value class matches region {region}", _vj(v))
            regions.setdefault(v, set()).add(region)
        for v, rs in regions.items():
            rep.check(len(rs) == 1, _fmt_in(f), "regions are disjoint", {"value": _vj(v), "regions": sorted(rs)})


def suite_canonical_codec(rep: Report, ctx: Context):
    for f in ctx.formats:
        c = codec_for(f, ctx.mutation)
        image = {c.decode(n) for n in range(1 << f.K)}
        top = 1 << f.P
        for e in range(f.emin_lsb - 1, f.emax_lsb + 2):
            for m in range(-top, top + 1):
                v = Finite(m, e)
                rep.check(
                    is_valid(f, v) == (v in image),
                    _fmt_in(f, m=m, e=e),
                    "canonical <=> in codec image",
                )


def suite_lattice_vs_codec(rep: Report, ctx: Context):
    for f in ctx.formats:
        c = codec_for(f, ctx.mutation)
        from_codec = sorted({evaluate(f, c.decode(n)) for n in range(1 << f.K)} - {NAN, POS_INF, NEG_INF})
        from_model = sorted({evaluate(f, v) for v in model_values(f) if isinstance(v, Finite)})
        rep.check(from_codec == from_model, _fmt_in(f), "codec finite values == model finite values")
        lat = lattice_for(f).finite
        rep.check(lat == from_model, _fmt_in(f), "lattice == model finite values")
        rep.check(all(a < b for a, b in zip(lat, lat[1:])), _fmt_in(f), "lattice strictly increasing")
        rep.check(sum(1 for v in lat if v.m == 0) == 1, _fmt_in(f), "zero appears once")
        expected = (1 << f.K) - len(f.reserved_codes())
        rep.check(len(lat) == expected, _fmt_in(f), "lattice size = 2^K - reserved", {"size": len(lat)})


# ---------------------------------------------------------------- rounding


def _grid_neighbours(grid, x):
    i = bisect.bisect_right(grid, x)
    down = grid[i - 1] if i > 0 else None
    j = bisect.bisect_left(grid, x)
    up = grid[j] if j < len(grid) else None
    return down, up


def _rounding_cells(f: Format, sweeper: Sweeper):
    grid = unbounded_grid(f, 3)
    for x in midpoint_lattice(f):
        yield x, grid, sweeper.rounded(x)


def suite_rounding_faithful(rep: Report, ctx: Context):
    for f in ctx.formats:
        sw = Sweeper(f)
        for x, grid, outs in _rounding_cells(f, sw):
            down, up = _grid_neighbours(grid, x)
            for y, fams in outs.items():
                rep.check(y in (down, up), _fmt_in(f, x=x), "result is RD(x) or RU(x)", {"y": xr_str(y), "modes": sorted(fams.values())})


def suite_rounding_exact(rep: Report, ctx: Context):
    for f in ctx.formats:
        sw = Sweeper(f)
        for x in unbounded_grid(f, 3):
            outs = sw.rounded(x)
            rep.check(list(outs) == [x], _fmt_in(f, x=x), "grid points round to themselves", [xr_str(y) for y in outs])


def suite_rounding_monotonic(rep: Report, ctx: Context):
    for f in ctx.formats:
        for mode in DETERMINISTIC_MODES:
            prev_x = prev_y = None
            for x in midpoint_lattice(f):
                y = round_to_precision(f, x, mode)
                if prev_y is not None:
                    rep.check(
                        prev_y <= y,
                        _fmt_in(f, x1=prev_x, x2=x, mode=str(mode)),
                        "x1 <= x2 implies rnd(x1) <= rnd(x2)",
                        {"y1": xr_str(prev_y), "y2": xr_str(y)},
                    )
                prev_x, prev_y = x, y


def suite_rounding_weak_monotonic(rep: Report, ctx: Context):
    for f in ctx.formats:
        sw = Sweeper(f)
        for x, grid, outs in _rounding_cells(f, sw):
            down, up = _grid_neighbours(grid, x)
            for y, fams in outs.items():
                # tightest representable bounds on each side; wider ones follow
                rep.check(y <= up, _fmt_in(f, x=x, v=up), "x <= v implies rnd(x) <= v", sorted(fams.values()))
                rep.check(down <= y, _fmt_in(f, x=x, v=down), "v <= x implies v <= rnd(x)", sorted(fams.values()))


def suite_rounding_carry(rep: Report, ctx: Context):
    for f in ctx.formats:
        P = f.P
        for e_msb in range(f.emin, f.emax + 2):
            step = pow2(e_msb - P + 1)
            top = Dyadic((1 << P) - 1, e_msb - P + 1)
            x = top + step - step.scale(-2)
            want = pow2(e_msb + 1)
            for mode in (RU, RNE):
                y = round_to_precision(f, x, mode)
                rep.check(y == want, _fmt_in(f, x=x, mode=str(mode)), "carry out of the binade", {"y": xr_str(y)})
            if f.signed:
                y = round_to_precision(f, -x, RD)
                rep.check(y == -want, _fmt_in(f, x=-x, mode="rd"), "carry out of the binade", {"y": xr_str(y)})


def suite_nearest_oracle(rep: Report, ctx: Context):
    for f in ctx.formats:
        lat = lattice_for(f)
        grid = unbounded_grid(f, 3)
        for x in midpoint_lattice(f):
            y = round_to_precision(f, x, RNE)
            down, up = _grid_neighbours(grid, x)
            best = min(abs(down - x), abs(up - x))
            rep.check(abs(y - x) == best, _fmt_in(f, x=x), "RNE is nearest on the P-bit grid", {"y": xr_str(y)})
            if f.M_lo <= x <= f.M_hi:
                rep.check(
                    abs(y - x) == lat.nearest_distance(x),
                    _fmt_in(f, x=x),
                    "RNE is nearest in the value set",
                    {"y": xr_str(y)},
                )


def _parity_oracle(lo: Dyadic, hi: Dyadic, want_even: bool) -> Dyadic:
    """For one-bit grids: the neighbour whose exponent has the wanted parity.

    Zero has no exponent; it counts as the even neighbour.
    """
    if lo.m == 0 or hi.m == 0:
        zero, other = (lo, hi) if lo.m == 0 else (hi, lo)
        return zero if want_even else other
    lo_even = msb_exponent(lo) % 2 == 0
    return lo if lo_even == want_even else hi


def suite_p1_ties(rep: Report, ctx: Context):
    for f in ctx.formats:
        if f.P != 1:
            continue
        grid = unbounded_grid(f, 3)
        for lo, hi in zip(grid, grid[1:]):
            mid = (lo + hi).scale(-1)
            y = round_to_precision(f, mid, RNE)
            want = _parity_oracle(lo, hi, True)
            rep.check(y == want, _fmt_in(f, x=mid, lo=lo, hi=hi), "RNE tie picks even-exponent neighbour", {"y": xr_str(y), "want": xr_str(want)})
            for x in (mid, lo + (hi - lo).scale(-2), hi - (hi - lo).scale(-2)):
                y = round_to_precision(f, x, RO)
                want = _parity_oracle(lo, hi, False)
                rep.check(y == want, _fmt_in(f, x=x, lo=lo, hi=hi), "RO picks odd-exponent neighbour", {"y": xr_str(y), "want": xr_str(want)})


# ---------------------------------------------------------------- projection


def _projected_safe(rep, f, sw, x):
    try:
        return sw.projected(x)
    except NotInValueSet as exc:
        rep.check(False, _fmt_in(f, x=x), "projection lands in the value set", str(exc))
        return {}


def suite_project_identity(rep: Report, ctx: Context):
    for f in ctx.formats:
        sw = Sweeper(f)
        for x in midpoint_lattice(f):
            if not f.M_lo <= x <= f.M_hi:
                continue
            for y, fams in sw.rounded(x).items():
                for sat in SatMode:
                    z = evaluate(f, sw.encoded(saturate(f, y, sat)))
                    rep.check(z == y, _fmt_in(f, x=x, sat=str(sat)), "Projection == RoundToPrecision in range", {"y": xr_str(y), "z": xr_str(z), "modes": sorted(fams.values())})


def suite_project_faith(rep: Report, ctx: Context):
    for f in ctx.formats:
        if not f.signed:
            continue
        lat = lattice_for(f)
        sw = Sweeper(f)
        for x in midpoint_lattice(f):
            allowed = lat.faithful(x)
            for z, fams in _projected_safe(rep, f, sw, x).items():
                rep.check(
                    z in allowed,
                    _fmt_in(f, x=x),
                    "projection is x, pred(x) or succ(x)",
                    {"z": xr_str(z), "allowed": sorted(xr_str(a) for a in allowed), "specs": sorted(fams.values())},
                )


def suite_overflow_image(rep: Report, ctx: Context):
    for f in ctx.formats:
        sw = Sweeper(f)
        for x in midpoint_lattice(f):
            if x > f.M_hi:
                allowed = (f.M_hi, POS_INF)
            elif f.signed and x < f.M_lo:
                allowed = (f.M_lo, NEG_INF)
            else:
                continue
            for z, fams in _projected_safe(rep, f, sw, x).items():
                rep.check(z in allowed, _fmt_in(f, x=x), "overflow lands on the boundary or infinity", {"z": xr_str(z), "specs": sorted(fams.values())})


def suite_closure(rep: Report, ctx: Context):
    for f in ctx.formats:
        sw = Sweeper(f)
        probes = list(midpoint_lattice(f))
        if not f.signed:
            probes += [-x for x in probes[1:8]] + [-f.M_hi.scale(1)]
        for x in probes:
            for z, fams in _projected_safe(rep, f, sw, x).items():
                v = sw.encoded(z)
                rep.check(is_valid(f, v), _fmt_in(f, x=x), "projection output is a legal value", _vj(v))
        for x in (POS_INF, NEG_INF, NAN):
            for sat in SatMode:
                for mode in DETERMINISTIC_MODES:
                    try:
                        v = project(f, x, ProjectionSpec(mode, sat))
                        ok = is_valid(f, v)
                    except NotInValueSet as exc:
                        v, ok = str(exc), False
                    rep.check(ok, _fmt_in(f, x=x, sat=str(sat), mode=str(mode)), "projection of a special is legal", str(v))


# ---------------------------------------------------------------- FastTwoSum

FTS_PROPERTIES = (
    "fts-exact-z",
    "fts-delta-in-f",
    "fts-eft",
    "fts-faith",
    "fts-overflow-immune",
    "fts-overflow-exact",
)


def _operand_pairs(f: Format, ctx: Context):
    values = lattice_for(f).finite
    pairs = itertools.product(values, values)
    if ctx.sample:
        pairs = list(pairs)
        rng = random.Random(f"{ctx.seed}:{f.name}")
        if len(pairs) > ctx.sample:
            pairs = rng.sample(pairs, ctx.sample)
    return pairs


MAX_WITNESSES = 10


def fts_sweep(f: Format, ctx: Context, reports: dict):
    """One pass over all operand pairs feeding every FastTwoSum property."""
    lat = lattice_for(f)
    sw = Sweeper(f, extra_nearest=True)
    M_hi = f.M_hi
    for A, B in _operand_pairs(f, ctx):
        exact = A + B
        in_range = abs(exact) <= M_hi
        ordered = _canonical_exponent(f, A) >= _canonical_exponent(f, B)
        base = {"format": f.name, "a": xr_str(A), "b": xr_str(B)}
        for s, fams1 in sw.projected(exact).items():
            label1 = next(iter(fams1.values()))
            nearest = [lbl for fam, lbl in fams1.items() if fam in NEAREST_FAMILIES]
            if not is_finite(s):
                continue
            diff = s - A
            delta = exact - s
            cell = dict(base, s=xr_str(s), spec1=label1)
            if in_range and ordered:
                reports["fts-exact-z"].check(diff in lat, cell, "s - a in V_f", {"s-a": xr_str(diff)})
            if in_range and nearest:
                reports["fts-delta-in-f"].check(
                    delta in lat, dict(cell, spec1=nearest[0]), "a + b - s in V_f", {"delta": xr_str(delta)}
                )
            immune = reports["fts-overflow-immune"]
            for y, fams2 in sw.rounded(diff).items():
                ok = f.M_lo <= y <= M_hi
                inputs = dict(cell, rnd2=next(iter(fams2.values())))
                trace = {"s-a": xr_str(diff), "rounded": xr_str(y)}
                if ordered:
                    immune.check(ok, inputs, "step 2 does not overflow", trace)
                elif not ok and len(immune.witnesses) < MAX_WITNESSES:
                    # outside the e_a >= e_b hypothesis step 2 can overflow
                    immune.witnesses.append(dict(inputs, trace=trace, violated="step 2 overflows when e_a < e_b"))
            want_faith = in_range and ordered
            want_exact = (in_range and ordered and nearest) or (
                not in_range and abs(s) == M_hi and ordered
            )
            if not (want_faith or want_exact):
                continue
            allowed = lat.faithful(delta) if want_faith else None
            for z, fams2 in sw.projected(diff).items():
                for t, fams3 in sw.projected(xr_sub(B, z)).items():
                    tr = dict(cell, z=xr_str(z), t=xr_str(t), spec2=next(iter(fams2.values())), spec3=next(iter(fams3.values())))
                    if want_faith:
                        reports["fts-faith"].check(t in allowed, tr, "t is a faithful rounding of delta", {"delta": xr_str(delta)})
                    if want_exact:
                        name = "fts-eft" if in_range else "fts-overflow-exact"
                        if in_range:
                            tr["spec1"] = nearest[0]
                        reports[name].check(t == delta, tr, "t == a + b - s", {"delta": xr_str(delta)})


# ---------------------------------------------------------------- ExtractScalar


def _max_j(x: Dyadic, sigma: Dyadic):
    """Largest j >= 0 with |x| <= 2^-j sigma; None when unbounded (x == 0)."""
    if x.m == 0:
        return None
    if abs(x) > sigma:
        return -1
    j = 0
    while abs(x).scale(j + 1) <= sigma:
        j += 1
    return j


def _es_cells(f: Format):
    lat = lattice_for(f)
    for sigma in lat.finite:
        if sigma.m != 1:
            continue  # sigma must be a positive power of two
        for x in lat.finite:
            j = _max_j(x, sigma)
            if j is not None and j < 0:
                continue
            if abs(sigma + x) > f.M_hi:
                continue
            yield sigma, x, j


def _es_check(f: Format, sigma, x, j, sats):
    sv, xv = encode_value(f, sigma), encode_value(f, x)
    tr = extract_scalar(f, sv, xv, *sats, j=j)
    # x == 0 admits every j; check (d) at a j large enough to force x_h == 0
    j_eff = j if j is not None else f.emax - f.emin_lsb + 2 + max(0, sigma.e)
    return tr, extract_scalar_conditions(f, tr, j_eff)


def suite_extract_scalar(rep: Report, ctx: Context):
    for f in ctx.formats:
        if not f.signed or f.P < 2:
            continue
        for sigma, x, j in _es_cells(f):
            for sats in itertools.product(SatMode, repeat=3):
                tr, cond = _es_check(f, sigma, x, j, sats)
                for key in "abcd":
                    rep.check(
                        cond[key],
                        {"format": f.name, "sigma": xr_str(sigma), "x": xr_str(x), "j": j, "sats": [str(s) for s in sats]},
                        f"condition ({key})",
                        tr.to_json(),
                    )


def suite_extract_scalar_p1(rep: Report, ctx: Context):
    """One-bit formats: (a) must hold and some input must break (d)."""
    for f in ctx.formats:
        if not f.signed or f.P != 1:
            continue
        for sigma, x, j in _es_cells(f):
            sats = (SatMode.SAT_FINITE,) * 3
            tr, cond = _es_check(f, sigma, x, j, sats)
            inputs = {"format": f.name, "sigma": xr_str(sigma), "x": xr_str(x), "j": j}
            rep.check(cond["a"], inputs, "condition (a)", tr.to_json())
            if cond["a"] and not cond["d"]:
                rep.witnesses.append(dict(inputs, trace=tr.to_json(), violated="condition (d)"))
    rep.cases += 1
    if not rep.witnesses:
        rep.fail({"formats": [f.name for f in ctx.formats]}, None, "no P=1 witness violating (d) found")


# ---------------------------------------------------------------- registry


@dataclass(frozen=True)
class Suite:
    name: str
    run: object
    kmax: int
    deep_kmax: int
    spec: str = "-"
    signed_only: bool = False


def _fts_runner(prop):
    def run(rep: Report, ctx: Context):
        formats = [f for f in ctx.formats if f.signed]
        _fill_fts_cache(formats, ctx)
        for f in formats:
            sub = _FTS_CACHE[(f, ctx.sample, ctx.seed)][prop]
            rep.cases += sub.cases
            rep.failure_count += sub.failure_count
            rep.failures.extend(sub.failures[: max(0, 50 - len(rep.failures))])
            rep.witnesses.extend(sub.witnesses[: max(0, MAX_WITNESSES - len(rep.witnesses))])

    run.__name__ = f"suite_{prop.replace('-', '_')}"
    return run


# one FastTwoSum sweep feeds all six property reports
_FTS_CACHE = {}


def _fts_cell(args):
    f, sample, seed = args
    reports = {p: Report(p, f.name, "") for p in FTS_PROPERTIES}
    fts_sweep(f, Context([f], seed=seed, sample=sample), reports)
    return reports


def _fill_fts_cache(formats, ctx: Context):
    todo = [(f, ctx.sample, ctx.seed) for f in formats if (f, ctx.sample, ctx.seed) not in _FTS_CACHE]
    if ctx.jobs > 1 and len(todo) > 1:
        # largest formats first so the pool stays busy; merge order is by key
        todo.sort(key=lambda cell: -cell[0].K)
        with ProcessPoolExecutor(ctx.jobs) as pool:
            done = list(pool.map(_fts_cell, todo))
    else:
        done = [_fts_cell(cell) for cell in todo]
    _FTS_CACHE.update(zip(todo, done))


ALL_SPECS = "rd,ru,rz,rne,ro,sr:1..6(all draws) x satfin,ovfinf,satprop"

SUITES = {
    s.name: s
    for s in [
        Suite("emax-consistency", suite_emax_consistency, 10, 10),
        Suite("special-encodings", suite_special_encodings, 10, 10),
        Suite("emax-errata", suite_emax_errata, 10, 10),
        Suite("triangle-isomorphism", suite_triangle, 8, 8),
        Suite("differential-decode", suite_differential, 8, 8),
        Suite("reduction", suite_reduction, 8, 8),
        Suite("region-disjointness", suite_region_disjointness, 8, 8),
        Suite("canonical-codec", suite_canonical_codec, 8, 8),
        Suite("lattice-vs-codec", suite_lattice_vs_codec, 8, 8),
        Suite("rounding-faithful", suite_rounding_faithful, 6, 8, ALL_SPECS),
        Suite("rounding-exact", suite_rounding_exact, 6, 8, ALL_SPECS),
        Suite("rounding-monotonic", suite_rounding_monotonic, 6, 8, "rd,ru,rz,rne,ro"),
        Suite("rounding-weak-monotonic", suite_rounding_weak_monotonic, 6, 8, ALL_SPECS),
        Suite("rounding-carry", suite_rounding_carry, 6, 8, "ru,rne,rd"),
        Suite("nearest-oracle", suite_nearest_oracle, 6, 8, "rne"),
        Suite("p1-rne-ties", suite_p1_ties, 8, 8, "rne,ro"),
        Suite("project-identity", suite_project_identity, 6, 8, ALL_SPECS),
        Suite("project-faith", suite_project_faith, 6, 8, ALL_SPECS, True),
        Suite("overflow-image", suite_overflow_image, 6, 8, ALL_SPECS),
        Suite("closure", suite_closure, 6, 8, ALL_SPECS),
        *[
            Suite(p, _fts_runner(p), 6, 8, ALL_SPECS + " per step; rn adds ties-down/up", True)
            for p in FTS_PROPERTIES
        ],
        Suite("extract-scalar", suite_extract_scalar, 6, 8, "rne x all sat triples", True),
        Suite("extract-scalar-d-p1", suite_extract_scalar_p1, 6, 8, "rne/satfin", True),
    ]
}

# every lemma/theorem that must have a suite; checked by the coverage gate
REQUIRED_SUITES = (
    "emax-consistency",
    "special-encodings",
    "emax-errata",
    "triangle-isomorphism",
    "differential-decode",
    "reduction",
    "region-disjointness",
    "canonical-codec",
    "lattice-vs-codec",
    "rounding-faithful",
    "rounding-exact",
    "rounding-monotonic",
    "rounding-weak-monotonic",
    "rounding-carry",
    "nearest-oracle",
    "p1-rne-ties",
    "project-identity",
    "project-faith",
    "overflow-image",
    "closure",
    "fts-exact-z",
    "fts-delta-in-f",
    "fts-eft",
    "fts-faith",
    "fts-overflow-immune",
    "fts-overflow-exact",
    "extract-scalar",
    "extract-scalar-d-p1",
)


def missing_suites():
    return [name for name in REQUIRED_SUITES if name not in SUITES]


def run_suite(
    name, kmin=3, kmax=None, *, deep=False, seed=0, mutation=None, sample=None, formats=None, jobs=1
) -> Report:
    suite = SUITES[name]
    if formats is None:
        top = kmax if kmax is not None else (suite.deep_kmax if deep else suite.kmax)
        formats = all_formats(kmin, top, signed=True if suite.signed_only else None)
        label = f"K{kmin}..{top}"
    else:
        label = ",".join(f.name for f in formats)
    rep = Report(name, label, suite.spec)
    ctx = Context(formats=list(formats), mutation=mutation, seed=seed, sample=sample, jobs=jobs)
    t0 = time.perf_counter()
    suite.run(rep, ctx)
    rep.ms = (time.perf_counter() - t0) * 1000
    return rep


def run_all(names=None, **kw):
    return [run_suite(n, **kw) for n in (names or list(SUITES))]
