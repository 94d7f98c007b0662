"""Command-line front end.

Results go to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 verification failure, 2 usage error, 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from fractions import Fraction

from . import arith
from .arith import CapExceeded, format_decimal
from .emd import Composition, comp_to_partition, emd, emd_via_bijection, expected_emd, expected_emd_limit, series_expand
from .partitions import RectBound
from .polynomials import IntPoly, n_poly_closed, n_poly_recursive, n_poly_symdiff, w_poly
from .verify import CHECKS, SCHEMA_VERSION, VerifyConfig, run_checks
from .wiener import build_hasse, wiener_bfs, wiener_formula

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

log = logging.getLogger("emdpoly")

_LEVELS = {"error": logging.ERROR, "warn": logging.WARNING, "warning": logging.WARNING,
           "info": logging.INFO, "debug": logging.DEBUG}


class UsageError(Exception):
    pass


def _setup_logging():
    level = _LEVELS.get(os.environ.get("LOG_LEVEL", "warn").lower(), logging.WARNING)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue().rstrip("\n")


def _json(obj) -> str:
    return json.dumps({"schema_version": SCHEMA_VERSION, **obj}, sort_keys=True)


def _render_poly(f: IntPoly, fmt: str, meta: dict) -> str:
    if fmt == "json":
        return _json({**meta, "coeffs": list(f.coeffs)})
    if fmt == "csv":
        return _csv([("degree", "coefficient")] + [(k, c) for k, c in enumerate(f.coeffs)])
    if f.is_zero():
        return "0"
    return " ".join(str(c) for c in f.coeffs[f.low_degree:])


def _render_rational(x: Fraction, fmt: str, digits: int | None, meta: dict) -> str:
    exact = str(x)
    if fmt == "json":
        out = {**meta, "numerator": x.numerator, "denominator": x.denominator, "value": exact}
        if digits is not None:
            out["decimal"] = format_decimal(x, digits)
        return _json(out)
    if fmt == "csv":
        header, row = ["value"], [exact]
        if digits is not None:
            header.append("decimal")
            row.append(format_decimal(x, digits))
        return _csv([header, row])
    if digits is not None:
        return f"{exact} ({format_decimal(x, digits)})"
    return exact


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def cmd_npoly(args) -> int:
    if args.n is not None:
        if args.p is not None or args.q is not None:
            raise UsageError("give either N or --p/--q, not both")
        p = q = args.n
    elif args.p is not None and args.q is not None:
        p, q = args.p, args.q
    else:
        raise UsageError("npoly needs N or both --p and --q")
    if args.method == "closed":
        if p != q:
            raise UsageError("method 'closed' needs p == q")
        f = n_poly_closed(p)
    elif args.method == "symdiff":
        f = n_poly_symdiff(p, q, max_pairs=args.max_pairs)
    else:
        f = n_poly_recursive(p, q)
    print(_render_poly(f, args.format, {"p": p, "q": q, "method": args.method}))
    return EXIT_OK


def cmd_wpoly(args) -> int:
    print(_render_poly(w_poly(args.p, args.q), args.format, {"p": args.p, "q": args.q}))
    return EXIT_OK


def cmd_expect(args) -> int:
    print(_render_rational(expected_emd(args.s, args.n), args.format, args.decimal, {"s": args.s, "n": args.n}))
    return EXIT_OK


def cmd_limit(args) -> int:
    print(_render_rational(expected_emd_limit(args.n), args.format, args.decimal, {"n": args.n}))
    return EXIT_OK


def cmd_wiener(args) -> int:
    formula = wiener_formula(args.a, args.b)
    if not args.brute:
        if args.format == "json":
            print(_json({"a": args.a, "b": args.b, "formula": formula}))
        else:
            print(formula)
        return EXIT_OK
    bfs = wiener_bfs(build_hasse(RectBound(args.a, args.b), args.max_vertices))
    if args.format == "json":
        print(_json({"a": args.a, "b": args.b, "formula": formula, "bfs": bfs}))
    elif args.format == "csv":
        print(_csv([("formula", "bfs"), (formula, bfs)]))
    else:
        print(f"formula={formula} bfs={bfs}")
    if formula != bfs:
        log.error("Wiener index mismatch for %dx%d: formula=%d bfs=%d", args.a, args.b, formula, bfs)
        return EXIT_FAIL
    return EXIT_OK


def cmd_series(args) -> int:
    if args.coeffs is not None:
        if args.pole is None:
            raise UsageError("--coeffs needs --pole")
        numer, pole = IntPoly(tuple(args.coeffs)), args.pole
    elif args.p is not None and args.q is not None:
        if args.kind == "w":
            numer, pole = w_poly(args.p, args.q), args.p + args.q - 1
        else:
            numer, pole = n_poly_recursive(args.p, args.q), args.p + args.q
    else:
        raise UsageError("series needs P Q or --coeffs with --pole")
    values = series_expand(numer, pole, args.terms)
    if args.format == "json":
        print(_json({"numerator": list(numer.coeffs), "pole_order": pole, "coeffs": values}))
    elif args.format == "csv":
        print(_csv([("s", "coefficient")] + list(enumerate(values))))
    else:
        print(" ".join(map(str, values)))
    return EXIT_OK


def cmd_emd(args) -> int:
    try:
        alpha, beta = Composition(tuple(args.alpha)), Composition(tuple(args.beta))
        value = emd(alpha, beta)
    except ValueError as exc:
        raise UsageError(str(exc))
    if not args.bijection:
        print(_json({"emd": value}) if args.format == "json" else value)
        return EXIT_OK
    via = emd_via_bijection(alpha, beta)
    lam, mu = comp_to_partition(alpha), comp_to_partition(beta)
    if args.format == "json":
        print(_json({"emd": value, "bijection": via, "lambda": list(lam), "mu": list(mu)}))
    else:
        print(f"emd={value} bijection={via} lambda={tuple(lam)} mu={tuple(mu)}")
    return EXIT_OK if value == via else EXIT_FAIL


def cmd_verify(args) -> int:
    names = []
    if args.checks:
        names = [c.strip() for c in args.checks.split(",") if c.strip()]
        unknown = [c for c in names if c not in CHECKS]
        if unknown:
            raise UsageError(f"unknown check(s): {', '.join(unknown)}; known: {', '.join(sorted(CHECKS))}")
    cfg = VerifyConfig(args.max_n, args.max_s, args.max_pairs, args.max_vertices, names)
    reports = run_checks(cfg)
    if args.format == "json":
        print(json.dumps([r.to_dict() for r in reports], sort_keys=True, indent=2))
    elif args.format == "csv":
        rows = [("check", "params", "status", "counterexample", "elapsed_ms")]
        for r in reports:
            rows.append((r.check, json.dumps(r.params, sort_keys=True), r.status,
                         "" if r.counterexample is None else json.dumps(r.counterexample, sort_keys=True),
                         r.elapsed_ms))
        print(_csv(rows))
    else:
        for r in reports:
            params = " ".join(f"{k}={v}" for k, v in sorted(r.params.items()))
            line = f"{r.status.upper():4} {r.check} {params} ({r.elapsed_ms:.1f} ms)"
            if r.counterexample is not None:
                line += f" counterexample={json.dumps(r.counterexample, sort_keys=True)}"
            print(line)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _pos(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    caps = argparse.ArgumentParser(add_help=False)
    caps.add_argument("--max-pairs", type=_pos, default=arith.DEFAULT_MAX_PAIRS,
                      help="refuse brute-force sums over more ordered pairs than this")
    caps.add_argument("--max-vertices", type=_pos, default=arith.DEFAULT_MAX_VERTICES,
                      help="refuse Hasse graphs with more vertices than this")

    parser = argparse.ArgumentParser(prog="emdpoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("npoly", parents=[common, caps], help="the numerator polynomial N_pq(t)")
    p.add_argument("n", nargs="?", type=_nonneg)
    p.add_argument("--p", type=_nonneg)
    p.add_argument("--q", type=_nonneg)
    p.add_argument("--method", choices=("recursive", "closed", "symdiff"), default="recursive")
    p.set_defaults(func=cmd_npoly)

    p = sub.add_parser("wpoly", parents=[common], help="the numerator polynomial W_pq(t)")
    p.add_argument("p", type=_pos)
    p.add_argument("q", type=_pos)
    p.set_defaults(func=cmd_wpoly)

    p = sub.add_parser("expect", parents=[common], help="expected EMD over C(s,n) x C(s,n)")
    p.add_argument("s", type=_nonneg)
    p.add_argument("n", type=_pos)
    p.add_argument("--decimal", type=_nonneg, metavar="DIGITS")
    p.set_defaults(func=cmd_expect)

    p = sub.add_parser("limit", parents=[common], help="limit of expected EMD / s as s grows")
    p.add_argument("n", type=_pos)
    p.add_argument("--decimal", type=_nonneg, metavar="DIGITS")
    p.set_defaults(func=cmd_limit)

    p = sub.add_parser("wiener", parents=[common, caps], help="Wiener index of Par(a x b)")
    p.add_argument("a", type=_pos)
    p.add_argument("b", type=_pos)
    p.add_argument("--brute", action="store_true", help="also compute by BFS and compare")
    p.set_defaults(func=cmd_wiener)

    p = sub.add_parser("series", parents=[common], help="series coefficients of numer/(1-t)^pole")
    p.add_argument("p", nargs="?", type=_pos)
    p.add_argument("q", nargs="?", type=_pos)
    p.add_argument("--kind", choices=("n", "w"), default="n",
                   help="n: N_pq/(1-t)^(p+q); w: W_pq/(1-t)^(p+q-1)")
    p.add_argument("--coeffs", type=_int_list, help="explicit numerator, lowest degree first")
    p.add_argument("--pole", type=_pos)
    p.add_argument("--terms", type=_pos, default=8)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("emd", parents=[common], help="EMD between two histograms")
    p.add_argument("alpha", type=_int_list)
    p.add_argument("beta", type=_int_list)
    p.add_argument("--bijection", action="store_true", help="also compute via Young diagrams")
    p.set_defaults(func=cmd_emd)

    p = sub.add_parser("verify", parents=[common, caps], help="run verification sweeps")
    p.add_argument("--max-n", type=_pos)
    p.add_argument("--max-s", type=_nonneg)
    p.add_argument("--checks", help=f"comma-separated subset of: {', '.join(sorted(CHECKS))}")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    _setup_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"emdpoly {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"emdpoly {args.command}: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ArithmeticError as exc:
        print(f"emdpoly {args.command}: internal error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
