"""Command-line front end: ``qtrsk verify | forward | backward | insert | sample``."""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from .errors import ParseError, QTRSKError
from .growth import (
    Distribution,
    Matrix01,
    backward_distribution,
    forward_distribution,
    growth_insert,
    qrst_word_insert,
)
from .sampling import sample_many
from .suites import SUITES, Options, run_suite
from .weights import Tableau


def rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError("expected a rational p/q", text, 0) from None


def _mode(args) -> tuple[str, tuple | None]:
    if getattr(args, "jack", False):
        return "alpha", None
    if getattr(args, "eval", None):
        return "numeric", tuple(rational(x) for x in args.eval)
    return "qt", None


def _print_distribution(dist: Distribution, as_json: bool, header: str) -> None:
    if as_json:
        print(json.dumps({"input": header, "mode": dist.mode, "distribution": dist.to_json()}, indent=2))
        return
    print(header)
    rows = dist.to_json()
    width = max((len(r["outcome"]) for r in rows), default=0)
    for r in rows:
        print(f"  {r['outcome']:<{width}}  {r['value']}")


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    opts = Options(
        max_cells=args.max_cells,
        rows=args.rows,
        cols=args.cols,
        seed=args.seed,
        eval_point=tuple(rational(x) for x in args.eval) if args.eval else None,
    )
    reports = [run_suite(n, opts) for n in names]
    if args.json:
        out = [r.to_json() for r in reports]
        print(json.dumps(out[0] if len(out) == 1 else out, indent=2))
    else:
        for r in reports:
            print(r.text())
    return 0 if all(r.ok for r in reports) else 1


def cmd_forward(args) -> int:
    A = Matrix01.parse(args.matrix)
    mode, point = _mode(args)
    _print_distribution(forward_distribution(A, mode, point), args.json, f"A = {A.text()}")
    return 0


def cmd_backward(args) -> int:
    P = Tableau.parse(args.p, "ssyt")
    Q = Tableau.parse(args.q, "dual_ssyt")
    mode, point = _mode(args)
    dist = backward_distribution(P, Q, args.rows, args.cols, mode, point)
    _print_distribution(dist, args.json, f"P = {P.text()}  Q = {Q.text()}")
    return 0


RULE_ALIASES = {"qt": "qt", "row": "row", "f_row": "row", "col": "col", "f_col": "col", "words": "words"}


def cmd_insert(args) -> int:
    T = Tableau.parse(args.tableau, "ssyt")
    try:
        values = tuple(int(v) for v in args.values.split(","))
    except ValueError:
        raise ParseError("expected comma-separated positive integers", args.values, 0) from None
    rule = RULE_ALIASES.get(args.rule)
    if rule is None:
        raise ParseError(f"unknown rule {args.rule!r}", args.rule, 0)
    header = f"insert {','.join(map(str, values))} into {T.text()} ({rule})"
    if rule in ("row", "col"):
        out = growth_insert(T, values, rule)
        if args.json:
            print(json.dumps({"input": header, "result": out.text()}, indent=2))
        else:
            print(header)
            print(f"  {out.text()}")
        return 0
    mode, point = _mode(args)
    if rule == "words":
        if len(values) != 1:
            raise ParseError("the word rule inserts a single letter", args.values, 0)
        dist = qrst_word_insert(T, values[0], mode, point)
    else:
        dist = growth_insert(T, values, "qt", mode, point)
    _print_distribution(dist, args.json, header)
    return 0


def cmd_sample(args) -> int:
    A = Matrix01.parse(args.matrix)
    q0, t0 = rational(args.q), rational(args.t)
    freq = sample_many(A, q0, t0, args.seed, args.n)
    exact = forward_distribution(A, "numeric", (q0, t0)) if not args.no_exact else None
    keys = sorted(set(freq) | (set(exact.support()) if exact else set()), key=lambda k: (k[0].sort_key(), k[1].sort_key()))
    rows = []
    for key in keys:
        row = {"outcome": f"{key[0].text()} , {key[1].text()}", "count": freq.get(key, 0), "frequency": freq.get(key, 0) / args.n}
        if exact is not None:
            p = exact.get(key)
            row["exact"] = str(p)
            row["z"] = (row["frequency"] - float(p)) / math.sqrt(float(p * (1 - p)) / args.n) if 0 < p < 1 else 0.0
        rows.append(row)
    header = {"matrix": A.text(), "q": str(q0), "t": str(t0), "seed": args.seed, "n": args.n}
    if args.json:
        print(json.dumps({**header, "samples": rows}, indent=2))
        return 0
    print(f"A = {A.text()}  q = {q0}  t = {t0}  seed = {args.seed}  n = {args.n}")
    width = max((len(r["outcome"]) for r in rows), default=0)
    for r in rows:
        line = f"  {r['outcome']:<{width}}  {r['count']:>8}  {r['frequency']:.4f}"
        if "exact" in r:
            line += f"  exact {float(Fraction(r['exact'])):.4f}  z {r['z']:+.2f}"
        print(line)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qtrsk", description="Exact (q,t)-randomized dual RSK.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", help=f"one of: all, {', '.join(SUITES)}")
    v.add_argument("--max-cells", type=int)
    v.add_argument("--rows", type=int)
    v.add_argument("--cols", type=int)
    v.add_argument("--seed", type=int, default=2024)
    v.add_argument("--eval", nargs=2, metavar=("Q0", "T0"))
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    def values_flags(sp):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--jack", action="store_true", help="Jack limit q = t^alpha, t -> 1")
        g.add_argument("--eval", nargs=2, metavar=("Q0", "T0"), help="evaluate at a rational point")
        sp.add_argument("--json", action="store_true")

    f = sub.add_parser("forward", help="distribution of (P, Q) for a 0/1 matrix")
    f.add_argument("--matrix", required=True, help="rows of 0/1 joined by ';', e.g. 110;001")
    values_flags(f)
    f.set_defaults(func=cmd_forward)

    b = sub.add_parser("backward", help="distribution of matrices for a tableau pair")
    b.add_argument("--p", required=True, help="semistandard tableau, e.g. 1,1;2")
    b.add_argument("--q", required=True, help="dual semistandard tableau, e.g. 1,2;3")
    b.add_argument("--rows", type=int, help="number of matrix rows (default: largest entry of P)")
    b.add_argument("--cols", type=int, help="number of matrix columns (default: largest entry of Q)")
    values_flags(b)
    b.set_defaults(func=cmd_backward)

    i = sub.add_parser("insert", help="insert values into a tableau")
    i.add_argument("--tableau", required=True)
    i.add_argument("--values", required=True, help="strictly increasing, e.g. 2,3")
    i.add_argument("--rule", default="qt", help="qt, row, col or words")
    values_flags(i)
    i.set_defaults(func=cmd_insert)

    s = sub.add_parser("sample", help="sample (P, Q) at a numeric point")
    s.add_argument("--matrix", required=True)
    s.add_argument("--q", required=True)
    s.add_argument("--t", required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--n", type=int, default=1000)
    s.add_argument("--no-exact", action="store_true", help="skip the exact distribution")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_sample)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except QTRSKError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
