"""Acceptance criteria 1-8, one test each.

Every test prints a single ``PASS``/``FAIL`` line; the lines are repeated
in the pytest terminal summary. Run directly with
``python tests/test_acceptance.py`` for just the lines.
"""

import time

import pytest

from p3109.codec import MUTATIONS
from p3109.formats import all_formats
from p3109.numerics import Dyadic
from p3109.verify import run_suite
from p3109.verify.suites import FTS_PROPERTIES, _FTS_CACHE

RESULTS = []


def record(number, title, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({detail})"
    RESULTS.append(line)
    print(line)
    return ok


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def test_criterion_1_triangle_isomorphism():
    formats = all_formats(3, 8)
    rep, secs = timed(lambda: run_suite("triangle-isomorphism", formats=formats))
    ok = rep.passed and secs < 30
    record(1, "triangle isomorphism K3..8", ok, f"{len(formats)} formats, {rep.failure_count} failures, {secs:.1f}s < 30s")
    assert ok, rep.failures[:3]


def test_criterion_2_differential_decode():
    rep = run_suite("differential-decode", formats=all_formats(3, 8))
    record(2, "decode == decode_reference K3..8", rep.passed, f"{rep.cases} encodings, {rep.failure_count} mismatches")
    assert rep.passed, rep.failures[:3]


def test_criterion_3_emax_errata():
    formats = all_formats(3, 10)
    rep = run_suite("emax-errata", formats=formats)
    direct = []
    for f in formats:
        if f.signed or not f.extended or f.P > 2:
            continue
        want = 2**f.W - (3 if f.P == 1 else 2) - f.B
        direct.append(f.emax == want and f.emax != 2**f.W - 1 - f.B and f.pos_inf_code == 2**f.K - 2)
    ok = rep.passed and len(direct) == 16 and all(direct)
    record(3, "unsigned extended emax/infinity errata K3..10", ok, f"{len(direct)} P<=2 formats, {rep.failure_count} suite failures")
    assert ok, rep.failures[:3]


def test_criterion_4_projection():
    formats = all_formats(3, 6, signed=True)

    def both():
        return [run_suite(n, formats=formats) for n in ("project-faith", "project-identity")]

    reps, secs = timed(both)
    bad = sum(r.failure_count for r in reps)
    ok = bad == 0 and secs < 60
    record(4, "project-faith + project-identity, signed K<=6", ok, f"{sum(r.cases for r in reps)} cases, {bad} violations, {secs:.1f}s < 60s")
    assert ok, [r.failures[:3] for r in reps]


def test_criterion_5_fast_two_sum():
    formats = all_formats(3, 6, signed=True)
    _FTS_CACHE.clear()  # time the sweep itself, not a cached replay

    def sweep():
        return [run_suite(p, formats=formats) for p in FTS_PROPERTIES]

    reps, secs = timed(sweep)
    p12 = {f.P for f in formats if f.P <= 2}
    bad = {r.suite: r.failure_count for r in reps if not r.passed}
    ok = not bad and secs < 120 and p12 == {1, 2}
    detail = ", ".join(f"{r.suite}={r.cases}" for r in reps)
    record(5, "FastTwoSum lemmas and theorems, signed K<=6", ok, f"{detail}; failures {bad or 0}; {secs:.1f}s < 120s")
    assert ok, [r.failures[:3] for r in reps]


def test_criterion_6_extract_scalar():
    formats = all_formats(3, 6, signed=True)
    main = run_suite("extract-scalar", formats=formats)
    p1 = run_suite("extract-scalar-d-p1", formats=formats)
    named = [w for w in p1.witnesses if (w["format"], w["sigma"], w["x"], w["j"]) == ("4p1se", "2", "1", 1)]
    ok = main.passed and p1.passed and bool(p1.witnesses) and bool(named)
    if named:
        tr = named[0]["trace"]
        xh, xl = (Dyadic(int(tr[k]["m"]), tr[k]["e"]) for k in ("x_h", "x_l"))
        detail = f"sigma=2, x=1, j=1 gives x_h={xh}, x_l={xl}"
    else:
        detail = "4p1se witness missing"
    record(6, "ExtractScalar (a)-(d) P>=2 and P=1 (d) witness", ok, f"{main.cases} checks, {main.failure_count} failures; {len(p1.witnesses)} witnesses; 4p1se {detail}")
    assert ok, main.failures[:3]


def test_criterion_7_p1_rne_ties():
    formats = [f for f in all_formats(3, 8) if f.P == 1]
    rep = run_suite("p1-rne-ties", formats=formats)
    record(7, "P=1 RNE ties on even exponent, K<=8", rep.passed, f"{len(formats)} formats, {rep.cases} checks, {rep.failure_count} failures")
    assert rep.passed, rep.failures[:3]


CODEC_SUITES = ("triangle-isomorphism", "differential-decode", "special-encodings", "reduction", "emax-consistency")


def test_criterion_8_mutation_sanity():
    caught = {}
    for mutation in MUTATIONS:
        caught[mutation] = [
            name for name in CODEC_SUITES if not run_suite(name, kmax=8, mutation=mutation).passed
        ]
    ok = all(caught.values())
    detail = "; ".join(f"{m}: {len(v)} failing suites" for m, v in caught.items())
    record(8, "each codec mutation breaks a suite", ok, detail)
    assert ok, caught


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
