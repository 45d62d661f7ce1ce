"""Command line: ``laxosp build | verify | export-eval``.

Exit status is 0 on success, 1 when a verification check fails and 2 on any
usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .export import MODES, OBJECTS, BuildConfig, build_object, to_dense_text, to_json
from .qscalar import EvalPoint
from .verify import CHECKS, run_checks


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _even_n(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 2 or n % 2:
        raise argparse.ArgumentTypeError(f"n must be an even integer >= 2, got {n}")
    return n


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="laxosp", description="Lax operator and vector R-matrices of U_q[osp(2|n)].")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def object_flags(sp, need_q: bool):
        sp.add_argument("--n", type=_even_n, required=True)
        sp.add_argument("--object", choices=OBJECTS, default="vector-R")
        sp.add_argument("--mode", default="closed-form",
                        choices=sorted({m for ms in MODES.values() for m in ms}))
        sp.add_argument("--format", choices=("json", "dense-text"), default="json")
        sp.add_argument("--at-q", type=_rational, required=need_q, metavar="NUM/DEN")
        sp.add_argument("--out", metavar="PATH")

    object_flags(sub.add_parser("build", help="build an object and write it out"), need_q=False)
    object_flags(sub.add_parser("export-eval", help="build an object specialized at a rational q"), need_q=True)

    v = sub.add_parser("verify", help="run verification checks")
    v.add_argument("--n", type=_even_n, required=True)
    v.add_argument("--checks", default=",".join(CHECKS),
                   help="comma-separated subset of: " + ", ".join(CHECKS))
    v.add_argument("--at-q", type=_rational, metavar="NUM/DEN")
    v.add_argument("--threads", type=int, default=1)
    v.add_argument("--json", action="store_true", help="print reports as JSON lines")
    return p


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_build(args, generic_only: bool) -> int:
    if args.at_q is not None:
        if args.at_q == 0:
            raise UsageError("q = 0 is not allowed")
        if generic_only and args.at_q in (1, -1):
            raise UsageError("q = 1 and q = -1 are degenerate; use export-eval for the classical limit")
    try:
        cfg = BuildConfig(n=args.n, object=args.object, mode=args.mode, at_q=args.at_q)
    except ValueError as exc:
        raise UsageError(str(exc))
    doc = build_object(cfg)
    _emit(to_json(doc) if args.format == "json" else to_dense_text(doc), args.out)
    return 0


def _cmd_verify(args) -> int:
    names = [x.strip() for x in args.checks.split(",") if x.strip()]
    unknown = [x for x in names if x not in CHECKS]
    if unknown or not names:
        raise UsageError(f"unknown checks: {', '.join(unknown) or '(none given)'}")
    if args.threads < 1:
        raise UsageError("--threads must be at least 1")
    point = None
    if args.at_q is not None:
        if args.at_q in (0, 1, -1):
            raise UsageError("numeric mode needs q outside {0, 1, -1}")
        point = EvalPoint(args.at_q)
    reports = run_checks(args.n, names, point, threads=args.threads)
    for rep in reports:
        print(json.dumps(rep.to_dict(), sort_keys=True) if args.json else rep.summary())
        if rep.status == "not-applicable" and not args.json:
            print(f"       skipped: {rep.check} is not applicable for n={args.n}")
    ok = all(r.passed for r in reports)
    if not args.json:
        print("all checks passed" if ok else "FAILED")
    return 0 if ok else 1


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "build":
            return _cmd_build(args, generic_only=True)
        if args.command == "export-eval":
            return _cmd_build(args, generic_only=False)
        return _cmd_verify(args)
    except UsageError as exc:
        print(f"laxosp: error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # an internal error is reported as a failure, never another code
        print(f"laxosp: internal error: {exc!r}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
