"""Command-line front end: enumeration, generating functions, partition
functions, special-point determinants, closed-form counts and the identity
verification suites.

Outputs are deterministic: identical invocations with identical seeds are
byte-identical.  Timings are therefore kept out of the reports unless
--timings is passed.  Exit codes: 0 success, 1 verification failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import determinant, formulas, icemodel, verify
from .enum_asm import census, gen_asms, inversion_genfunc
from .exactnum import Cyclo

SCHEMA_VERSION = verify.SCHEMA_VERSION


class UsageError(ValueError):
    pass


def parse_value(text: str) -> Cyclo:
    """Parse a rational or zeta-expression: 2, -1/3, zeta, 2*zeta, 1/2+3*zeta."""
    s = text.replace(" ", "")
    if not s:
        raise UsageError("empty value")
    total = Cyclo(0)
    i = 0
    sign = 1
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        i = 1
    term = ""
    for ch in s[i:] + "\0":
        if ch in "+-\0":
            total = total + sign * _parse_term(term)
            sign = -1 if ch == "-" else 1
            term = ""
        else:
            term += ch
    return total


def _parse_term(term: str) -> Cyclo:
    if not term:
        raise UsageError("dangling sign in value")
    if term == "zeta":
        return Cyclo(0, 1)
    if term.endswith("*zeta"):
        return Cyclo(0, Fraction(term[:-5]))
    if term.endswith("zeta"):
        raise UsageError(f"write {term[:-4]}*zeta instead of {term}")
    try:
        return Cyclo(Fraction(term))
    except ValueError as exc:
        raise UsageError(f"cannot parse value {term!r}") from exc


def _parse_assignments(pairs: Sequence[str]) -> dict[str, Cyclo]:
    out = {}
    for pair in pairs:
        if "=" not in pair:
            raise UsageError(f"--assign expects var=value, got {pair!r}")
        var, _, val = pair.partition("=")
        out[var.strip()] = parse_value(val)
    return out


@contextlib.contextmanager
def _guard_override(max_states: Optional[int]):
    """Temporarily raise or lower the state-count guard via its env var."""
    if max_states is None:
        yield
        return
    key = icemodel._MAX_STATES_ENV
    saved = os.environ.get(key)
    os.environ[key] = str(max_states)
    try:
        yield
    finally:
        if saved is None:
            os.environ.pop(key, None)
        else:
            os.environ[key] = saved


def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _jsonline(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


# ----------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------


def _cmd_enumerate(args) -> int:
    n = args.order
    if n is None:
        raise UsageError("enumerate requires --order")
    if args.census:
        table = census(n, args.klass)
        if args.format == "csv":
            _emit(table.to_csv(), args.out)
        elif args.format == "json":
            _emit(_jsonline({"schemaVersion": SCHEMA_VERSION} | table.to_json_obj()),
                  args.out)
        else:
            lines = [f"order {n} class {args.klass}: {table.total_count()} matrices"]
            for (r, central), poly in sorted(table.rows.items(),
                                             key=lambda kv: (kv[0][0], kv[0][1] or 0)):
                tag = f"r={r}" + (f" central={central:+d}" if central is not None else "")
                lines.append(f"  {tag}: {poly}")
            _emit("\n".join(lines) + "\n", args.out)
        return 0
    if args.count:
        _emit(f"{sum(1 for _ in gen_asms(n, args.klass))}\n", args.out)
        return 0
    chunks = []
    for m in gen_asms(n, args.klass):
        if args.format == "json":
            chunks.append(_jsonline([list(row) for row in m.entries]))
        else:
            chunks.append(m.to_text() + "\n\n")
    _emit("".join(chunks), args.out)
    return 0


def _cmd_genfunc(args) -> int:
    if args.order is None:
        raise UsageError("genfunc requires --order")
    poly = inversion_genfunc(args.order, args.klass, args.mode)
    if args.format == "json":
        _emit(_jsonline({"schemaVersion": SCHEMA_VERSION, "order": args.order,
                         "class": args.klass, "mode": args.mode,
                         "poly": poly.to_json_obj()}), args.out)
    else:
        _emit(str(poly) + "\n", args.out)
    return 0


def _model_spec(args) -> icemodel.ModelSpec:
    if args.model == "dwbc":
        if args.order is None:
            raise UsageError("model dwbc requires --order")
        return icemodel.ModelSpec("dwbc", args.order)
    if args.m is None:
        raise UsageError(f"model {args.model} requires --m")
    return icemodel.ModelSpec(args.model, args.m)


def _cmd_partition(args) -> int:
    spec = _model_spec(args)
    if args.assign and args.modified:
        raise UsageError("--modified is symbolic only")
    if args.assign:
        assignment = _parse_assignments(args.assign)
        xs, ys = spec.spectral_vars()
        missing = [v for v in ("a", *xs, *ys) if v not in assignment]
        if missing:
            raise UsageError(f"missing assignments for {', '.join(missing)}")
        result = icemodel.partition_function(spec, assignment, args.max_states)
    elif args.modified:
        result = icemodel.modified_partition(spec, args.max_states)
    else:
        result = icemodel.partition_function(spec, None, args.max_states)
    if args.format == "json":
        _emit(_jsonline({"schemaVersion": SCHEMA_VERSION} | result.to_json_obj()),
              args.out)
    else:
        _emit(f"{result.value}\n", args.out)
    return 0


def _cmd_det(args) -> int:
    if args.u is None:
        raise UsageError("det requires --u with comma-separated rationals")
    u = tuple(Cyclo(Fraction(tok)) for tok in args.u.split(","))
    size = args.order if args.model == "dwbc" else args.m
    if size is None:
        raise UsageError("det requires --order (dwbc) or --m (ht2, ht-odd)")
    value = determinant.special_z(args.model, size, u)
    if args.format == "json":
        _emit(_jsonline({"schemaVersion": SCHEMA_VERSION, "model": args.model,
                         "size": size, "u": args.u.split(","), "value": str(value)}),
              args.out)
    else:
        _emit(f"{value}\n", args.out)
    return 0


def _cmd_formulas(args) -> int:
    if args.order is None:
        raise UsageError("formulas requires --order")
    family, order = args.family, args.order
    if args.refined:
        if family == "asm":
            poly = formulas.refined_asm_closed(order)
        elif family == "ht-even":
            poly = formulas.refined_ht2_closed(order // 2, allow_base_case=True)
        elif family in ("ht-odd", "ht-odd-plus", "ht-odd-minus", "robbins"):
            m = (order - 1) // 2
            plus, minus, robbins = formulas.refined_ht_odd(m, 1)
            poly = {"ht-odd": plus + minus, "ht-odd-plus": plus,
                    "ht-odd-minus": minus, "robbins": robbins}[family]
        else:
            raise UsageError(f"no refined form for family {family}")
        if args.format == "json":
            _emit(_jsonline({"schemaVersion": SCHEMA_VERSION, "family": family,
                             "order": order, "refined": True,
                             "poly": poly.to_json_obj()}), args.out)
        else:
            _emit(str(poly) + "\n", args.out)
        return 0
    value = formulas.count_closed(family, order)
    if args.format == "json":
        _emit(_jsonline({"schemaVersion": SCHEMA_VERSION, "family": family,
                         "order": order, "value": str(value)}), args.out)
    else:
        _emit(f"{value}\n", args.out)
    return 0


def _cmd_verify(args) -> int:
    if not args.all and not args.suite:
        raise UsageError("verify requires --suite ID or --all")
    overrides = {}
    if args.points is not None:
        for sid, (_, defaults) in verify.SUITES.items():
            if "points" in defaults:
                overrides[sid] = {"points": args.points}
    with _guard_override(args.max_states):
        if args.all:
            reports = verify.run_all(args.seed, overrides)
        else:
            if args.suite not in verify.SUITES:
                raise UsageError(f"unknown suite {args.suite!r}; known: "
                                 + ", ".join(verify.SUITES))
            reports = [verify.run_suite(args.suite, overrides.get(args.suite),
                                        args.seed)]
    if args.format == "text":
        lines = []
        for r in reports:
            mark = "PASS" if r.passed else "FAIL"
            extra = f"  {r.elapsed:.2f}s" if args.timings else ""
            lines.append(f"{mark}  {r.suite_id:22s} checks={r.checks_run}{extra}")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit("".join(r.to_json(include_elapsed=args.timings) + "\n" for r in reports),
              args.out)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_report(args) -> int:
    suites = []
    for path in args.files:
        with open(path) as fh:
            for line in fh:
                line = line.strip()
                if line:
                    suites.append(json.loads(line))
    passed = sum(1 for s in suites if s.get("status") == "pass")
    if args.format == "text":
        lines = [f"{s.get('status', '?').upper():4s}  {s.get('suiteId', '?')}"
                 for s in sorted(suites, key=lambda s: s.get("suiteId", ""))]
        lines.append(f"{passed}/{len(suites)} suites passed")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        merged = {
            "schemaVersion": SCHEMA_VERSION,
            "total": len(suites),
            "passed": passed,
            "failed": len(suites) - passed,
            "suites": sorted(suites, key=lambda s: s.get("suiteId", "")),
        }
        _emit(_jsonline(merged), args.out)
    return 0 if passed == len(suites) else 1


# ----------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="halfturn-ice",
        description="Exact ASM enumeration, square-ice partition functions "
                    "and identity verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "csv", "text"), default="text")
        p.add_argument("--out", metavar="PATH", default=None)

    p = sub.add_parser("enumerate", help="stream or count ASMs, emit censuses")
    p.add_argument("--order", "-n", type=int)
    p.add_argument("--class", dest="klass", choices=("all", "ht"), default="all")
    p.add_argument("--census", action="store_true")
    p.add_argument("--count", action="store_true")
    common(p)
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("genfunc", help="inversion generating functions")
    p.add_argument("--order", "-n", type=int)
    p.add_argument("--class", dest="klass", choices=("all", "ht"), default="all")
    p.add_argument("--mode", choices=("brute", "closed"), default="closed")
    common(p)
    p.set_defaults(fn=_cmd_genfunc)

    p = sub.add_parser("partition", help="exact partition functions")
    p.add_argument("--model", choices=icemodel.KINDS, default="dwbc")
    p.add_argument("--order", "-n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--symbolic", action="store_true",
                   help="symbolic output (default when no --assign is given)")
    p.add_argument("--modified", action="store_true",
                   help="multiply by the monomial clearing negative exponents")
    p.add_argument("--assign", action="append", default=[], metavar="VAR=VALUE",
                   help="evaluate at values (rationals or zeta-expressions)")
    p.add_argument("--max-states", type=int, default=None)
    common(p)
    p.set_defaults(fn=_cmd_partition)

    p = sub.add_parser("det", help="special-point determinant evaluators")
    p.add_argument("--model", choices=("dwbc", "ht2", "ht-odd"), default="dwbc")
    p.add_argument("--order", "-n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--u", metavar="Q1,Q2,...", default=None,
                   help="comma-separated distinct rationals")
    common(p)
    p.set_defaults(fn=_cmd_det)

    p = sub.add_parser("formulas", help="closed-form counts and refined polynomials")
    p.add_argument("--family", choices=("asm", "ht-even", "ht-odd", "ht-odd-plus",
                                        "ht-odd-minus", "robbins"), required=True)
    p.add_argument("--order", "-n", type=int)
    p.add_argument("--refined", action="store_true")
    common(p)
    p.set_defaults(fn=_cmd_formulas)

    p = sub.add_parser("verify", help="run identity-verification suites")
    p.add_argument("--suite", metavar="ID", default=None)
    p.add_argument("--all", action="store_true")
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p.add_argument("--points", type=int, default=None,
                   help="override the point count of random-point suites")
    p.add_argument("--timings", action="store_true",
                   help="include elapsed seconds (not byte-reproducible)")
    p.add_argument("--max-states", type=int, default=None)
    common(p)
    p.set_defaults(fn=_cmd_verify, format="json")  # one JSON line per suite

    p = sub.add_parser("report", help="merge verification reports")
    p.add_argument("files", nargs="+", metavar="REPORT.jsonl")
    common(p)
    p.set_defaults(fn=_cmd_report, format="json")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (formulas.UnsupportedSize, icemodel.SizeTooLarge,
            determinant.DimensionMismatch, determinant.CoincidentPoints,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
