"""Command-line front end.

Every subcommand prints exact data (JSON or CSV) built from rational and
polynomial-in-s arithmetic, so repeated runs with the same arguments are
byte-for-byte identical.  The truncation order comes from --N when given,
else from the environment variable BOSONORDER_TRUNC_ORDER, else 8.

Exit codes:
    0   success (for ``verify``: every case passed)
    1   a verification suite reported a failing case
    2   usage error (bad flags, unknown subcommand; raised by argparse)
    3   data precondition violated (reported by the library as ValueError)
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from .scalars import as_s, parse_rational
from .riordan import array_coeffs, catalog
from .hsu_shiue import HSParams, hs_egf, hs_triangle_rec
from .two_point import TwoPointParams, two_point_egf
from .ordering import (SingleAnnihilatorWord, power_symbol, s_ordered_symbol,
                       weyl_power_aaa)
from .verify import SUITES, run_all, run_suite, suite_passed

DEFAULT_TRUNC_ORDER = 8
ENV_TRUNC_ORDER = "BOSONORDER_TRUNC_ORDER"


def _trunc_order(args) -> int:
    if args.N is not None:
        return args.N
    env = os.environ.get(ENV_TRUNC_ORDER)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{ENV_TRUNC_ORDER} must be an integer, "
                             f"got {env!r}") from None
    return DEFAULT_TRUNC_ORDER


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _emit(text: str, out) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _egf_csv(egf) -> str:
    """One line per z-order; cells are the t-polynomial coefficients."""
    return "\n".join(",".join(str(c) for c in row) if row else "0"
                     for row in egf.zcoeffs) + "\n"


def _table_csv(poly) -> str:
    """Lines n,m,coeff in sorted key order."""
    return "".join(f"{n},{m},{c}\n" for (n, m), c in poly.items())


def _symbol_series_csv(series) -> str:
    """Lines lambda,n,m,coeff in sorted key order."""
    out = []
    for k in range(series.order + 1):
        out.extend(f"{k},{n},{m},{c}\n" for (n, m), c in series[k].items())
    return "".join(out)


# ---------------------------------------------------------------------------
# Subcommand handlers.
# ---------------------------------------------------------------------------

def _cmd_hs_triangle(args) -> int:
    tri = hs_triangle_rec(HSParams(args.A, args.B, args.r), _trunc_order(args))
    _emit(tri.to_csv() if args.format == "csv" else _dump(tri.to_json()),
          args.out)
    return 0


def _cmd_hs_egf(args) -> int:
    egf = hs_egf(HSParams(args.A, args.B, args.r), _trunc_order(args))
    _emit(_egf_csv(egf) if args.format == "csv" else _dump(egf.to_json()),
          args.out)
    return 0


def _cmd_two_point_egf(args) -> int:
    p = TwoPointParams(args.A, args.B, args.r, args.r_prime, args.s)
    egf = two_point_egf(p, _trunc_order(args))
    _emit(_egf_csv(egf) if args.format == "csv" else _dump(egf.to_json()),
          args.out)
    return 0


def _cmd_order(args) -> int:
    w = SingleAnnihilatorWord(args.L, args.R)
    series = s_ordered_symbol(w, args.s, _trunc_order(args))
    _emit(_symbol_series_csv(series) if args.format == "csv"
          else _dump(series.to_json()), args.out)
    return 0


def _cmd_power(args) -> int:
    w = SingleAnnihilatorWord(args.L, args.R)
    poly = power_symbol(w, args.n, args.s)
    _emit(_table_csv(poly) if args.format == "csv" else _dump(poly.to_json()),
          args.out)
    return 0


def _cmd_weyl_aaa(args) -> int:
    poly = weyl_power_aaa(args.n)
    _emit(_table_csv(poly) if args.format == "csv" else _dump(poly.to_json()),
          args.out)
    return 0


def _cmd_verify(args) -> int:
    if args.suite == "all":
        reports = run_all(args.seed)
        ok = all(suite_passed(r) for r in reports)
        _emit(_dump(reports), args.out)
    else:
        report = run_suite(args.suite, args.seed)
        ok = suite_passed(report)
        _emit(_dump(report), args.out)
    return 0 if ok else 1


def _cmd_catalog(args) -> int:
    N = _trunc_order(args)
    pair = catalog(args.sequence, N)
    tri = array_coeffs(pair, N)
    if args.format == "csv":
        _emit(tri.to_csv(), args.out)
    else:
        _emit(_dump({"sequence": args.sequence,
                     "convention": pair.convention,
                     "g": pair.first.to_json(),
                     "f": pair.second.to_json(),
                     "triangle": tri.to_json()}), args.out)
    return 0


# ---------------------------------------------------------------------------
# Parser.
# ---------------------------------------------------------------------------

def _add_output_flags(sp) -> None:
    sp.add_argument("--format", choices=("json", "csv"), default="json",
                    help="output format (default json)")
    sp.add_argument("--out", metavar="FILE", default=None,
                    help="write to FILE instead of stdout")
    sp.add_argument("--N", type=int, default=None, metavar="ORDER",
                    help=f"truncation order (default ${ENV_TRUNC_ORDER} "
                         f"or {DEFAULT_TRUNC_ORDER})")


def _add_hs_params(sp) -> None:
    sp.add_argument("--A", type=parse_rational, required=True,
                    help="parameter A, a rational like 3 or -1/2")
    sp.add_argument("--B", type=parse_rational, required=True,
                    help="parameter B")
    sp.add_argument("--r", type=parse_rational, required=True,
                    help="parameter r")


def _add_s_flag(sp) -> None:
    sp.add_argument("--s", type=as_s, default="symbolic",
                    help="ordering parameter: a rational, or one of "
                         "normal/weyl/antinormal/symbolic (default symbolic)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bosonorder",
        description="Exact generalized-Stirling arrays and s-ordered "
                    "expansions of boson operators.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("hs-triangle",
                        help="generalized Stirling triangle HS(A, B, r)")
    _add_hs_params(sp)
    _add_output_flags(sp)
    sp.set_defaults(func=_cmd_hs_triangle)

    sp = sub.add_parser("hs-egf",
                        help="bivariate EGF d(z) exp(t h(z)) of HS(A, B, r)")
    _add_hs_params(sp)
    _add_output_flags(sp)
    sp.set_defaults(func=_cmd_hs_egf)

    sp = sub.add_parser("two-point-egf",
                        help="bivariate EGF of the two-point family "
                             "T(A, B, r, r'; s)")
    _add_hs_params(sp)
    sp.add_argument("--r-prime", type=parse_rational, required=True,
                    dest="r_prime", help="parameter r'")
    _add_s_flag(sp)
    _add_output_flags(sp)
    sp.set_defaults(func=_cmd_two_point_egf)

    sp = sub.add_parser("order",
                        help="s-ordered symbol series of exp(lambda ad^L a ad^R)")
    sp.add_argument("--L", type=int, required=True,
                    help="creation operators left of the annihilator")
    sp.add_argument("--R", type=int, required=True,
                    help="creation operators right of the annihilator")
    _add_s_flag(sp)
    _add_output_flags(sp)
    sp.set_defaults(func=_cmd_order)

    sp = sub.add_parser("power",
                        help="s-ordered symbol of the single power "
                             "(ad^L a ad^R)^n")
    sp.add_argument("--L", type=int, required=True)
    sp.add_argument("--R", type=int, required=True)
    sp.add_argument("--n", type=int, required=True, help="the power")
    _add_s_flag(sp)
    _add_output_flags(sp)
    sp.set_defaults(func=_cmd_power)

    sp = sub.add_parser("weyl-aaa",
                        help="Weyl-ordered symbol of (ad a ad)^n")
    sp.add_argument("--n", type=int, required=True, help="the power")
    _add_output_flags(sp)
    sp.set_defaults(func=_cmd_weyl_aaa)

    sp = sub.add_parser("verify",
                        help="run a verification suite and report JSON")
    sp.add_argument("suite", choices=list(SUITES) + ["all"],
                    help="suite name, or 'all'")
    sp.add_argument("--seed", type=int, default=0,
                    help="seed for randomized cases (default 0)")
    sp.add_argument("--out", metavar="FILE", default=None,
                    help="write the report to FILE instead of stdout")
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("catalog",
                        help="a classical Sheffer pair and its triangle")
    sp.add_argument("sequence",
                    choices=("touchard", "hermite", "laguerre", "abel"))
    _add_output_flags(sp)
    sp.set_defaults(func=_cmd_catalog)

    # argparse only recognizes -1 or -1.5 as values rather than flags; teach
    # every subparser that -1/3 is a value too, so "--B -1/3" parses.
    rational = re.compile(r"^-\d+(/\d+)?$")
    parser._negative_number_matcher = rational
    for chosen in sub.choices.values():
        chosen._negative_number_matcher = rational

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
