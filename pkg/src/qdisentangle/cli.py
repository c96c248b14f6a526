"""Command-line front end.

    qdisentangle bch --order 4
    qdisentangle qzassenhaus --order 3 --alphas 1,1,2,3 --format json
    qdisentangle verify --suite all --seed 1

Exit status: 0 on success, 1 when a verification suite fails, 2 on bad usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional

from .coeffield import PoleError, QRationalFunction, eval_at
from .disentangle import bch_terms, default_alphas, q_zassenhaus_terms, zassenhaus_terms
from .verify import SUITES, render_report, run_suites, suite_passed

MAX_ORDER = 10
DEFAULT_ORDER = 6
COSTLY_ORDER = 6


class UsageError(Exception):
    pass


def _alphas(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"--alphas needs comma-separated integers, got {text!r}")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qdisentangle",
        description="Generate and verify BCH, Zassenhaus and q-Zassenhaus terms.")
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json", "latex"), default="text")

    order_help = (f"highest term to generate (default {DEFAULT_ORDER}, at most {MAX_ORDER}; "
                  f"orders above {COSTLY_ORDER} take noticeably longer)")
    for name, help_text in (("bch", "print Z_1..Z_N of exp(A) exp(B) = exp(Z_1 + Z_2 + ...)"),
                            ("zassenhaus", "print C_2..C_N of exp(A+B) = exp(A) exp(B) exp(C_2) ...")):
        p = sub.add_parser(name, parents=[fmt], help=help_text, description=help_text)
        p.add_argument("--order", type=int, default=DEFAULT_ORDER, help=order_help)

    help_text = "print C_1..C_N of E_q(A+B) = E_{q^a0}(A) E_{q^a1}(C_1) E_{q^a2}(C_2) ..."
    p = sub.add_parser("qzassenhaus", parents=[fmt], help=help_text, description=help_text)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER, help=order_help)
    p.add_argument("--alphas", type=_alphas, default=None,
                   help="base exponents a0,a1,...,aN (at least N+1 integers); "
                        "default 1,1,2,3,...,N, the simplest schedule")
    p.add_argument("--intermediates", action="store_true",
                   help="also print the components G^(j)_k of the residual logarithms")
    p.add_argument("--q-value", type=_fraction, default=None, metavar="R",
                   help="evaluate all coefficients at the rational number q = R")

    help_text = "run verification suites and print a report"
    p = sub.add_parser("verify", parents=[fmt], help=help_text, description=help_text)
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--order", type=int, default=DEFAULT_ORDER,
                   help=f"order for the generated terms (default {DEFAULT_ORDER}, 2..{MAX_ORDER}); "
                        "catalog comparisons stop at 6 and reconstruction runs to degree max(8, order)")
    p.add_argument("--seed", type=int, default=1,
                   help="seed for random matrices (seeds S, S+1, S+2) and irregular schedules")
    return parser


def _check_order(order: int, low: int = 1):
    if not low <= order <= MAX_ORDER:
        raise UsageError(f"--order must be between {low} and {MAX_ORDER}, got {order}")
    if order > COSTLY_ORDER:
        print(f"warning: order {order} is expensive; expect seconds to minutes", file=sys.stderr)


def _evaluate(poly, q0):
    try:
        return poly.map_coefficients(lambda c: QRationalFunction.from_rational(eval_at(c, q0)))
    except PoleError:
        raise UsageError(f"a coefficient has a pole at q = {q0}")


def _emit(named, fmt, meta, out):
    if fmt == "json":
        results = [{"name": name, **poly.to_json()} for name, poly in named]
        out.write(json.dumps({"meta": meta, "results": results}, indent=2) + "\n")
    elif fmt == "latex":
        for name, poly in named:
            out.write(f"{_latex_name(name)} = {poly.latex()}\n")
    else:
        for name, poly in named:
            out.write(f"{name} = {poly.render()}\n")


def _latex_name(name: str) -> str:
    # "C_12" -> "C_{12}", "G^(1)_3" -> "G^{(1)}_{3}"
    head, _, idx = name.rpartition("_")
    if head.startswith("G^"):
        head = "G^{" + head[2:] + "}"
    return f"{head}_{{{idx}}}"


def _run_generate(args, out):
    _check_order(args.order)
    n = args.order
    meta = {"command": args.command, "order": n}
    if args.command == "bch":
        res = bch_terms(n)
        named = [(f"Z_{i}", res.terms[i]) for i in range(1, n + 1)]
    elif args.command == "zassenhaus":
        res = zassenhaus_terms(n)
        named = [(f"C_{i}", res.terms[i]) for i in range(2, n + 1)]
    else:
        alphas = default_alphas(n) if args.alphas is None else tuple(args.alphas)
        if len(alphas) < n + 1:
            raise UsageError(f"--alphas needs at least {n + 1} exponents for order {n}, "
                             f"got {len(alphas)}")
        alphas = alphas[: n + 1]
        res = q_zassenhaus_terms(n, alphas, intermediates=args.intermediates)
        meta["alphas"] = list(alphas)
        named = [(f"C_{i}", res.terms[i]) for i in range(1, n + 1)]
        if args.intermediates:
            named += [(f"G^({j})_{k}", res.intermediates[(j, k)])
                      for j, k in sorted(res.intermediates)]
        if args.q_value is not None:
            meta["q"] = str(args.q_value)
            named = [(name, _evaluate(p, args.q_value)) for name, p in named]
    _emit(named, args.format, meta, out)
    return 0


def _run_verify(args, out):
    _check_order(args.order, low=2)
    report = run_suites(args.suite, args.order, args.seed)
    ok = suite_passed(report)
    if args.format == "json":
        meta = {"command": "verify", "suite": args.suite, "order": args.order,
                "seed": args.seed, "passed": ok}
        out.write(json.dumps({"meta": meta, "results": report}, indent=2) + "\n")
    else:
        out.write(render_report(report) + "\n")
    return 0 if ok else 1


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "verify":
            return _run_verify(args, out)
        return _run_generate(args, out)
    except UsageError as exc:
        print(f"qdisentangle: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
