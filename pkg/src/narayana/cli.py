"""``narayana`` command-line interface.

Subcommands: ``enumerate``, ``stats``, ``poly``, ``digamma``, ``verify``.
Exit status is 0 on success, 1 when ``verify`` finds a failure and 2 for
usage or validation errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .bijections import digamma, digamma_inverse
from .dyck import word_to_polyomino
from .parking import para_poly
from .polyomino import (
    AreaWord,
    area,
    area_word,
    area_word_ranks,
    bounce,
    dinv,
    nara_enum,
    tilde_nara_enum,
)
from .qtpoly import QTPolynomial
from .recursion import RecursionSession
from .verify import CHECKS, run_checks, worker_count

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- serialization ------------------------------------------------------------

def polynomial_document(poly: QTPolynomial, family: str, sizes: dict, rs: Optional[tuple[int, int]] = None) -> dict:
    doc = {"family": family}
    doc.update(sizes)
    doc["r"], doc["s"] = rs if rs is not None else (None, None)
    doc["terms"] = [[i, j, str(c)] for i, j, c in poly.items()]
    return doc


def document_to_polynomial(doc: dict) -> QTPolynomial:
    return QTPolynomial({(i, j): int(c) for i, j, c in doc["terms"]})


def latex(poly: QTPolynomial) -> str:
    if poly.is_zero():
        return "0"
    parts = []
    for i, j, c in poly.items():
        mono = (f"q^{{{i}}}" if i else "") + (f"t^{{{j}}}" if j else "")
        coeff = "" if c == 1 and mono else ("-" if c == -1 and mono else str(c))
        parts.append(coeff + mono)
    return " + ".join(parts).replace("+ -", "- ")


def parse_word(text: str) -> AreaWord:
    try:
        return AreaWord.parse(text)
    except ValueError as exc:
        raise UsageError(f"invalid area word {text!r}: {exc}") from exc


# -- commands -------------------------------------------------------------------

def _positive(value: str) -> int:
    v = int(value)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {v}")
    return v


def _non_negative(value: str) -> int:
    v = int(value)
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be a non-negative integer, got {v}")
    return v


def cmd_enumerate(args, out) -> int:
    words = [" ".join(str(a) for a in AreaWord.from_ranks(r)) for r in area_word_ranks(args.m, args.n)]
    if args.format == "json":
        out.write(json.dumps({"m": args.m, "n": args.n, "count": len(words), "words": words}) + "\n")
    else:
        for w in words:
            out.write(w + "\n")
    return EXIT_OK


def cmd_stats(args, out) -> int:
    w = parse_word(args.word)
    P = word_to_polyomino(w)
    record = {"m": P.m, "n": P.n, "area": area(w), "dinv": dinv(w), "bounce": bounce(P)}
    if args.format == "json":
        out.write(json.dumps(record) + "\n")
    else:
        out.write(" ".join(f"{k}={v}" for k, v in record.items()) + "\n")
    return EXIT_OK


def compute_polynomial(family: str, first: int, second: int, method: str, rs: Optional[tuple[int, int]]) -> QTPolynomial:
    session = RecursionSession()
    if family == "nara":
        if method == "enumerate":
            return nara_enum(first, second, rs)
        return session.nara_rs(first, second, *rs) if rs else session.nara_total(first, second)
    if family == "tilde-nara":
        if method == "enumerate":
            return tilde_nara_enum(first, second, rs)
        return session.tilde_nara_rs(first, second, *rs) if rs else session.tilde_nara_total(first, second)
    if method == "enumerate":
        return para_poly(first, second, rs)
    return session.para_rs(first, second, *rs) if rs else session.para_total(first, second)


def cmd_poly(args, out) -> int:
    if (args.r is None) != (args.s is None):
        raise UsageError("--r and --s must be given together")
    rs = (args.r, args.s) if args.r is not None else None
    if args.family == "para":
        if args.a is None or args.b is None:
            raise UsageError("para needs --a and --b")
        if args.a + args.b == 0:
            raise UsageError("para needs a + b >= 1")
        first, second, sizes = args.a, args.b, {"a": args.a, "b": args.b}
    else:
        if args.m is None or args.n is None:
            raise UsageError(f"{args.family} needs --m and --n")
        first, second, sizes = args.m, args.n, {"m": args.m, "n": args.n}
    try:
        poly = compute_polynomial(args.family, first, second, args.method, rs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        out.write(json.dumps(polynomial_document(poly, args.family, sizes, rs)) + "\n")
    elif args.format == "latex":
        out.write(latex(poly) + "\n")
    else:
        out.write(str(poly) + "\n")
    return EXIT_OK


def cmd_digamma(args, out) -> int:
    P = word_to_polyomino(parse_word(args.word))
    image = digamma(P) if args.direction == "forward" else digamma_inverse(P)
    out.write(str(area_word(image)) + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.max_total < 2:
        raise UsageError("--max-total must be at least 2")
    names = [c.strip() for c in args.checks.split(",") if c.strip()] if args.checks else list(CHECKS)
    unknown = [c for c in names if c not in CHECKS]
    if unknown:
        raise UsageError(f"unknown check(s): {', '.join(unknown)}; choose from {', '.join(CHECKS)}")
    try:
        workers = worker_count()
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    results = run_checks(args.max_total, names, workers)
    failures = 0
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        line = f"{status}  {res.check:<12} m={res.m} n={res.n}"
        if not res.passed:
            failures += 1
            line += f"  {res.error}"
        out.write(line + "\n")
    out.write(f"{len(results) - failures}/{len(results)} checks passed\n")
    return EXIT_FAIL if failures else EXIT_OK


# -- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="narayana", description="q,t-Narayana polynomials of parallelogram polyominoes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list the area words of every polyomino in an m x n box")
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("stats", help="area, dinv and bounce of the polyomino with a given area word")
    p.add_argument("word", help='area word such as "0b 1 1b 2"')
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("poly", help="a generating polynomial, by enumeration or recursion")
    p.add_argument("family", choices=["nara", "tilde-nara", "para"])
    p.add_argument("--m", type=_positive)
    p.add_argument("--n", type=_positive)
    p.add_argument("--a", type=_non_negative)
    p.add_argument("--b", type=_non_negative)
    p.add_argument("--r", type=_non_negative)
    p.add_argument("--s", type=_non_negative)
    p.add_argument("--method", choices=["enumerate", "recursion"], default="enumerate")
    p.add_argument("--format", choices=["text", "json", "latex"], default="text")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("digamma", help="apply the area/bounce to dinv/area bijection")
    p.add_argument("word")
    p.add_argument("--direction", choices=["forward", "inverse"], default="forward")
    p.set_defaults(func=cmd_digamma)

    p = sub.add_parser("verify", help="check the theorems exhaustively on small boxes")
    p.add_argument("--max-total", type=int, default=6, help="largest m + n to check")
    p.add_argument("--checks", help=f"comma-separated subset of: {', '.join(CHECKS)}")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"narayana: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
