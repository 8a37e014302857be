"""Command-line front end: ``p3109 <subcommand> ...``.

Exit status is 0 on success, 1 when a verification or diff finds a
mismatch, and 2 for usage errors (bad flags, formats or literals).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .algorithms import PreconditionViolation, extract_scalar, extract_scalar_conditions, fast_two_sum
from .codec import MUTATIONS, codec_for, decode_reference, encode_bits, enumerate_format
from .formats import ConstraintViolation, Format, all_formats, derive, parse_format
from .model import Finite, Inf, NaN, NotInValueSet, encode_value, evaluate, value_to_json
from .numerics import xr_parse, xr_str
from .projection import ProjectionSpec, parse_sat, project
from .rounding import EntropySource, parse_mode

CSV_COLUMNS = ("encoding", "binary", "class", "m", "e", "value")


class UsageError(Exception):
    pass


def _format(text: str) -> Format:
    try:
        return parse_format(text)
    except (ValueError, ConstraintViolation) as exc:
        raise UsageError(str(exc)) from None


def _real(text: str):
    try:
        return xr_parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _member(f: Format, text: str):
    x = _real(text)
    try:
        return encode_value(f, x)
    except NotInValueSet as exc:
        raise UsageError(str(exc)) from None


def _spec(rnd: str, sat: str) -> ProjectionSpec:
    try:
        return ProjectionSpec(parse_mode(rnd), parse_sat(sat))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def value_class(f: Format, v) -> str:
    if isinstance(v, NaN):
        return "nan"
    if isinstance(v, Inf):
        return "-inf" if v.negative else "+inf"
    if v.m == 0:
        return "zero"
    return "subnormal" if abs(v.m) < (1 << (f.P - 1)) else "normal"


def table_rows(f: Format):
    for n, v, x in enumerate_format(f):
        finite = isinstance(v, Finite)
        yield {
            "encoding": n,
            "binary": format(n, f"0{f.K}b"),
            "class": value_class(f, v),
            "m": v.m if finite else "",
            "e": v.e if finite else "",
            "value": xr_str(x),
        }


def table_csv(f: Format) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    w.writerows(table_rows(f))
    return buf.getvalue()


_SPECIAL_NAMES = {"nan": "NaN", "+inf": "Inf(+)", "-inf": "Inf(-)"}


def _emit(out, text: str):
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


# ---------------------------------------------------------------- subcommands


def cmd_inspect(args) -> int:
    f = _format(args.format)
    rows = list(table_rows(f))
    if args.json:
        text = "".join(json.dumps(r) + "\n" for r in rows)
    elif args.csv:
        text = table_csv(f)
    else:
        c = derive(f)
        lines = [
            f"# {f.name}: K={f.K} P={f.P} W={c.W} B={c.B} emin={c.emin} emax={c.emax} "
            f"n_fmax={c.n_fmax} M_hi={c.M_hi} M_lo={c.M_lo}"
        ]
        for r in rows:
            if r["class"] in _SPECIAL_NAMES:
                shown = _SPECIAL_NAMES[r["class"]]
            else:
                shown = f"{r['value']}  ({r['m']}*2^{r['e']}, {r['class']})"
            lines.append(f"{r['encoding']:>5}  {r['binary']}  {shown}")
        text = "\n".join(lines) + "\n"
    _emit(args.out, text)
    return 0


def cmd_project(args) -> int:
    f = _format(args.format)
    x = _real(args.value)
    spec = _spec(args.rnd, args.sat)
    v = project(f, x, spec, EntropySource(args.seed))
    n = encode_bits(f, v)
    out = {
        "format": f.name,
        "input": xr_str(x),
        "spec": str(spec),
        "encoding": n,
        "binary": format(n, f"0{f.K}b"),
        "value": value_to_json(v),
        "real": xr_str(evaluate(f, v)),
    }
    if args.json:
        _emit(args.out, json.dumps(out) + "\n")
    else:
        _emit(args.out, f"{out['input']} -> encoding {n} ({out['binary']}) value {out['real']} [{spec}]\n")
    return 0


def cmd_fts(args) -> int:
    f = _format(args.format)
    a, b = _member(f, args.a), _member(f, args.b)
    default = (args.rnd, args.sat)
    specs = []
    for i, override in enumerate((args.spec1, args.spec2, args.spec3), 1):
        if override:
            try:
                specs.append(ProjectionSpec.parse(override))
            except ValueError as exc:
                raise UsageError(f"--spec{i}: {exc}") from None
        else:
            specs.append(_spec(*default))
    try:
        trace = fast_two_sum(f, a, b, *specs, ent=EntropySource(args.seed))
    except PreconditionViolation as exc:
        raise UsageError(str(exc)) from None
    _emit(args.out, json.dumps(dict(format=f.name, **trace.to_json())) + "\n")
    return 0


def cmd_extract(args) -> int:
    f = _format(args.format)
    sigma, x = _member(f, args.sigma), _member(f, args.x)
    try:
        sats = [parse_sat(s) for s in (args.sat1, args.sat2, args.sat3)]
        trace = extract_scalar(f, sigma, x, *sats, j=args.j)
    except (ValueError, PreconditionViolation) as exc:
        raise UsageError(str(exc)) from None
    out = dict(format=f.name, **trace.to_json())
    if args.j is not None:
        out["conditions"] = extract_scalar_conditions(f, trace, args.j)
    _emit(args.out, json.dumps(out) + "\n")
    return 0


def cmd_verify(args) -> int:
    from .verify.suites import REQUIRED_SUITES, SUITES, missing_suites, run_suite

    if args.list:
        for name in SUITES:
            print(name)
        return 0
    gap = missing_suites()
    if gap:
        print(f"coverage gate: no suite registered for {', '.join(gap)}", file=sys.stderr)
        return 1
    names = list(REQUIRED_SUITES) if args.suite == "all" else args.suite.split(",")
    for name in names:
        if name not in SUITES:
            raise UsageError(f"--suite: unknown suite {name!r} (try --list)")
    ok = True
    chunks = []
    for name in names:
        rep = run_suite(
            name,
            kmin=args.kmin,
            kmax=args.kmax,
            deep=args.deep,
            seed=args.seed,
            mutation=args.mutation,
            sample=args.sample,
            jobs=args.jobs,
        )
        ok &= rep.passed
        line = rep.dumps() if args.json else rep.summary()
        if args.out:
            chunks.append(line + "\n")
        else:
            print(line, flush=True)
    if args.out:
        _emit(args.out, "".join(chunks))
    return 0 if ok else 1


def _format_list(args):
    if args.formats:
        return [_format(t) for t in args.formats]
    return all_formats(args.kmin, args.kmax)


def cmd_diff(args) -> int:
    mismatches = 0
    for f in _format_list(args):
        c = codec_for(f, args.mutation)
        for n in range(1 << f.K):
            a, b = c.decode(n), decode_reference(f, n)
            if a != b:
                mismatches += 1
                print(json.dumps({"format": f.name, "encoding": n, "decode": value_to_json(a), "reference": value_to_json(b)}))
        if args.golden:
            path = Path(args.golden) / f"{f.name}.csv"
            if not path.exists():
                print(f"{f.name}: no golden table at {path}", file=sys.stderr)
                mismatches += 1
                continue
            want = path.read_text().splitlines()
            got = table_csv(f).splitlines()
            for i, (w, g) in enumerate(zip(want, got)):
                if w != g:
                    mismatches += 1
                    print(json.dumps({"format": f.name, "line": i + 1, "golden": w, "current": g}))
            if len(want) != len(got):
                mismatches += 1
                print(json.dumps({"format": f.name, "golden_lines": len(want), "current_lines": len(got)}))
    print(f"{'FAIL' if mismatches else 'PASS'} diff: {mismatches} mismatches", file=sys.stderr)
    return 1 if mismatches else 0


def cmd_export(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    formats = _format_list(args)
    for f in formats:
        (out / f"{f.name}.csv").write_text(table_csv(f))
    print(f"wrote {len(formats)} tables to {out}", file=sys.stderr)
    return 0


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="p3109", description="P3109 format reference model")
    sub = p.add_subparsers(dest="command", required=True)

    def spec_flags(sp):
        sp.add_argument("--rnd", default="rne", help="rd, ru, rz, rne, ro or sr:<k>")
        sp.add_argument("--sat", default="satfin", help="satfin, ovfinf or satprop")
        sp.add_argument("--seed", type=int, default=0, help="entropy seed for stochastic rounding")

    sp = sub.add_parser("inspect", help="print the full encoding table of a format")
    sp.add_argument("format")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--json", action="store_true")
    mode.add_argument("--csv", action="store_true")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_inspect)

    sp = sub.add_parser("project", help="project one real value into a format")
    sp.add_argument("format")
    sp.add_argument("value", help="exact decimal, m*2^e, inf, -inf or nan")
    spec_flags(sp)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_project)

    sp = sub.add_parser("fts", help="FastTwoSum trace as JSON")
    sp.add_argument("format")
    sp.add_argument("a")
    sp.add_argument("b")
    spec_flags(sp)
    for i in (1, 2, 3):
        sp.add_argument(f"--spec{i}", help="rnd/sat for step %d, e.g. ru/ovfinf" % i)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_fts)

    sp = sub.add_parser("extract", help="ExtractScalar trace as JSON")
    sp.add_argument("format")
    sp.add_argument("sigma")
    sp.add_argument("x")
    for i in (1, 2, 3):
        sp.add_argument(f"--sat{i}", default="satfin")
    sp.add_argument("--j", type=int, help="also evaluate conditions (a)-(d) at this j")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_extract)

    sp = sub.add_parser("verify", help="run verification suites")
    sp.add_argument("--suite", default="all", help="suite name, comma list, or all")
    sp.add_argument("--list", action="store_true", help="list registered suites")
    sp.add_argument("--kmin", type=int, default=3)
    sp.add_argument("--kmax", type=int)
    sp.add_argument("--deep", action="store_true", help="raise default K limits to 8")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--sample", type=int, help="sample this many operand pairs per format")
    sp.add_argument("--mutation", choices=MUTATIONS)
    sp.add_argument("--jobs", type=int, default=1, help="worker processes for the FastTwoSum sweep")
    sp.add_argument("--json", action="store_true", help="one JSON report per line")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_verify)

    for name, func, helptext in (
        ("diff", cmd_diff, "differential codec test, optionally against golden CSVs"),
        ("export", cmd_export, "write one CSV encoding table per format"),
    ):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("formats", nargs="*", help="formats (default: all in --kmin..--kmax)")
        sp.add_argument("--kmin", type=int, default=3)
        sp.add_argument("--kmax", type=int, default=8)
        if name == "diff":
            sp.add_argument("--golden", help="directory of golden CSV tables")
            sp.add_argument("--mutation", choices=MUTATIONS)
        else:
            sp.add_argument("--out", required=True, help="output directory")
        sp.set_defaults(func=func)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"p3109 {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
