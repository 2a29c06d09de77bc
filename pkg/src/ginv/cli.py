"""``ginv`` command line.

Exit codes: 0 success / order holds, 1 order does not hold or inverse does not
exist, 2 usage or parse error, 3 a theorem check found a counterexample.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import geninv, orders, theorems
from .errors import GinvError, InverseMissing, MatrixParseError
from .fields import parse_field
from .geninv import InverseKind
from .orders import CoreCharacterization, OrderKind
from .textio import format_matrix, read_matrix

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_THEOREM = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _load(path: str):
    try:
        return read_matrix(path)
    except OSError as e:
        raise UsageError(f"{path}: {e.strerror}") from None
    except MatrixParseError as e:
        raise UsageError(f"{path}:{e.line}:{e.column}: {e.message}") from None


def _threads() -> int:
    raw = os.environ.get("GINV_THREADS")
    if raw is None:
        return 1
    if not raw.isdigit() or int(raw) < 1:
        raise UsageError(f"GINV_THREADS must be a positive integer, got {raw!r}")
    return int(raw)


def cmd_compute(args, out) -> int:
    a = _load(args.file)
    kind = InverseKind(args.inverse)
    report = geninv.inverse_report(kind, a)
    if args.json:
        out.write(_dump({
            "kind": kind.value,
            "input": format_matrix(a),
            "exists": report.exists,
            "result": format_matrix(report.result) if report.exists else None,
            "checks": report.checks,
        }))
    elif report.exists:
        out.write(f"# {kind.value} inverse\n")
        for name, ok in report.checks.items():
            out.write(f"# {name}: {'ok' if ok else 'FAILED'}\n")
        out.write(format_matrix(report.result))
    else:
        out.write(f"# {kind.value} inverse does not exist\n")
    return EXIT_OK if report.exists else EXIT_NEGATIVE


def cmd_order(args, out) -> int:
    a, b = _load(args.file_a), _load(args.file_b)
    if args.kind:
        which = OrderKind(args.kind)
        decide = orders.order_leq
    else:
        which = CoreCharacterization(args.via)
        decide = orders.core_leq_via
    try:
        d = decide(which, a, b)
    except InverseMissing as e:
        if args.json:
            out.write(_dump({"kind": which.value, "holds": None, "undefined": str(e)}))
        else:
            out.write(f"undefined: {e}\n")
        return EXIT_NEGATIVE
    if args.json:
        out.write(_dump({
            "kind": which.value,
            "holds": d.holds,
            "failed": d.failed,
            "witness": format_matrix(d.witness) if d.witness is not None else None,
        }))
    else:
        out.write("holds\n" if d.holds else f"does not hold (failed: {d.failed})\n")
        if d.witness is not None:
            out.write("# witness\n" + format_matrix(d.witness))
    return EXIT_OK if d.holds else EXIT_NEGATIVE


def _population(args) -> theorems.Population:
    try:
        fld = parse_field(args.field)
        if args.exhaustive:
            return theorems.Population.exhaustive(fld, args.dim, args.sample, args.seed)
        if args.random is not None:
            return theorems.Population.random(fld, args.dim, args.random, args.seed)
        return theorems.Population.constructed(fld, args.dim, args.constructed, args.seed)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _emit_reports(reports, as_json, out):
    if as_json:
        out.write(_dump([r.to_dict() for r in reports]))
        return
    for r in reports:
        out.write(r.summary_line() + "\n")
        for reason, n in sorted(r.skip_reasons.items()):
            out.write(f"    skipped {n}: {reason}\n")
        for key, n in sorted(r.observations.items()):
            out.write(f"    observed {key}: {n}\n")
        for cx in r.counterexamples:
            out.write(f"    counterexample {cx['case']}: failed {', '.join(cx['failed'])}\n")
            for label in ("a", "b"):
                for line in cx[label].splitlines():
                    out.write(f"      {label}| {line}\n")


def cmd_verify(args, out) -> int:
    try:
        if args.theorem.strip().lower() == "all":
            ids = list(theorems.TheoremId)
        else:
            ids = [theorems.TheoremId.parse(t) for t in args.theorem.split(",")]
    except GinvError as e:
        raise UsageError(str(e)) from None
    pop = _population(args)
    reports = theorems.run_campaign(ids, [pop], workers=_threads())
    _emit_reports(reports, args.json, out)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_THEOREM


def _fixture_json(fx: dict) -> dict:
    return {k: (format_matrix(v) if hasattr(v, "field") else v) for k, v in fx.items()}


def cmd_remarks(args, out) -> int:
    reports = theorems.reproduce_remarks()
    fx25, fx33 = theorems.r25_fixture(), theorems.r33_fixture()
    if args.json:
        out.write(_dump({"fixtures": {"R25": _fixture_json(fx25), "R33": _fixture_json(fx33)},
                         "reports": [r.to_dict() for r in reports]}))
    else:
        for name, fx in (("R25", fx25), ("R33", fx33)):
            out.write(f"{name} fixture\n")
            for k, v in fx.items():
                if hasattr(v, "field"):
                    out.write(f"  {k} =\n")
                    for line in format_matrix(v).splitlines()[2:]:
                        out.write(f"    {line}\n")
                else:
                    out.write(f"  {k}: {v}\n")
        _emit_reports(reports, False, out)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_THEOREM


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ginv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute a generalized inverse")
    p.add_argument("--inverse", required=True, choices=[k.value for k in InverseKind])
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("order", help="decide a partial order between two matrices")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--kind", choices=[k.value for k in OrderKind])
    g.add_argument("--via", choices=[k.value for k in CoreCharacterization],
                   help="decide the core order through one of its characterizations")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("verify", help="check theorems over a population of matrix pairs")
    p.add_argument("--theorem", required=True, help="an id such as T23, a comma list, or 'all'")
    p.add_argument("--field", required=True, help="Q, QI, GF(p) or GF(p^2)")
    p.add_argument("--dim", type=int, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--exhaustive", action="store_true", help="all pairs over a finite field")
    g.add_argument("--random", type=int, metavar="COUNT", help="seeded random pairs")
    g.add_argument("--constructed", type=int, metavar="COUNT", help="seeded pairs with a ≤⊕ b")
    p.add_argument("--sample", type=int, metavar="N", help="with --exhaustive: draw N pairs instead")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("remarks", help="reproduce the two published counterexamples")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_remarks)
    return parser


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    if getattr(args, "sample", None) is not None and not args.exhaustive:
        err.write("ginv: --sample only applies to --exhaustive\n")
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as e:
        err.write(f"ginv: {e}\n")
        return EXIT_USAGE
    except GinvError as e:
        err.write(f"ginv: {e}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
