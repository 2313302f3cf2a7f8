"""Command-line entry point: ``qsing classify | construct | verify-paper``.

Exit codes: 0 success, 1 operational error, 2 a theorem violation was found.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .classify import REPORT_KEYS, ClassificationReport, Witness, classify
from .constructors import ConstructionError, even_generators, odd_composite_generators
from .group import DEFAULT_CAP, ClosureError, closure
from .specfmt import GroupSpec, SpecError, emit_spec, parse_spec
from .verify import run_suites

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VIOLATION = 2


def format_report(report: ClassificationReport) -> str:
    doc = report.to_dict()
    width = max(len(k) for k in REPORT_KEYS)
    return "\n".join(f"{k.ljust(width)}  {_text(doc[k])}" for k in REPORT_KEYS)


def _text(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _emit_report(report: ClassificationReport, as_json: bool) -> int:
    if as_json:
        print(json.dumps(report.to_dict()))
    else:
        print(format_report(report))
    return EXIT_VIOLATION if report.theorem_witness is Witness.VIOLATION else EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    with open(args.path, "rb") as fh:
        spec = parse_spec(fh.read())
    G = closure(list(spec.generators), cap=args.max_order)
    return _emit_report(classify(G), args.json)


def cmd_construct(args: argparse.Namespace) -> int:
    if args.family == "even":
        if args.q is not None:
            raise ConstructionError("--q only applies to the odd-composite family")
        gens = even_generators(args.n)
    else:
        gens = odd_composite_generators(args.n, args.q)
    if args.emit == "spec":
        spec = GroupSpec(gens[0].ambient_order, gens[0].dim, tuple(gens))
        sys.stdout.write(emit_spec(spec))
        return EXIT_OK
    return _emit_report(classify(closure(gens, cap=args.max_order)), args.json)


def _n_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values or any(v < 2 for v in values):
        raise argparse.ArgumentTypeError("dimensions must be integers >= 2")
    return values


def cmd_verify_paper(args: argparse.Namespace) -> int:
    def show(res):
        print(f"{'PASS' if res.passed else 'FAIL'}  {res.name}")
        for c in res.checks:
            if not c.passed or args.verbose:
                mark = "ok  " if c.passed else "FAIL"
                extra = f"  ({c.detail})" if c.detail and not c.passed else ""
                print(f"    {mark} {c.name}{extra}")
        sys.stdout.flush()

    results = run_suites(args.n_list, conjugations=args.conjugations, seed=args.seed,
                         progress=show)
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} suites passed")
    if not failed:
        return EXIT_OK
    violation = any(
        "witness" in c.name or "violation" in c.name for r in failed for c in r.failures
    )
    return EXIT_VIOLATION if violation else EXIT_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsing",
        description="Classify quotient singularities of finite matrix groups over cyclotomic fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify the group described by a spec file")
    p.add_argument("path")
    p.add_argument("--json", action="store_true", help="print a JSON object")
    p.add_argument("--max-order", type=int, default=DEFAULT_CAP,
                   help=f"closure cap (default {DEFAULT_CAP})")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("construct", help="build a non-cyclic example family")
    p.add_argument("--family", required=True, choices=["even", "odd-composite"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, default=None, help="odd prime factor of n (odd-composite)")
    p.add_argument("--emit", choices=["spec", "report"], default="report")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-order", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify-paper", help="run the built-in verification suites")
    p.add_argument("--n-list", type=_n_list, default=None,
                   help="comma-separated dimensions (default 2,3,4,5,6,7,9,15)")
    p.add_argument("--conjugations", type=int, default=10,
                   help="random conjugates per odd prime dimension")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; 2 is reserved for violations.
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    try:
        return args.func(args)
    except (SpecError, ConstructionError, ClosureError, ValueError, OSError,
            ArithmeticError) as exc:
        print(f"qsing: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
