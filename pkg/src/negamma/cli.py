"""Command-line interface: ``negamma eval|table|verify|coeffs``.

Exit codes: 0 success, 2 domain error, 3 overflow, 64 usage error.
Results go to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys

from .coefficients import DEFAULT_ORDER, default_table, table_to_dict
from .errors import DomainError, NegammaError, RangeOverflowError
from .expansion import (
    EvalResult,
    exp_integral_p,
    gamma_lower_neg,
    gamma_star_neg,
    gamma_upper_neg,
    gtilde,
    p_ratio,
    q_ratio,
)
from .special import ComplexValue
from .verify import run_sweep, table_rows

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_DOMAIN = 2
EXIT_OVERFLOW = 3
EXIT_USAGE = 64

FUNCTIONS = ("gstar", "gtilde", "upper_plus", "upper_minus", "lower_plus", "lower_minus", "Q", "P", "Ep")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def fmt(x: float) -> str:
    return f"{x:.17g}"


def evaluate(fn: str, a: float, z: float, order: int = DEFAULT_ORDER,
             log_scaled: bool = False) -> EvalResult:
    """Dispatch one ``eval`` request; for ``Ep`` the parameter ``a`` is ``p``."""
    if fn == "gstar":
        return gamma_star_neg(a, z, order, log_scaled=log_scaled)
    if fn == "gtilde":
        return gtilde(a, z, order)
    if fn in ("upper_plus", "upper_minus"):
        return gamma_upper_neg(a, z, 1 if fn == "upper_plus" else -1, order, log_scaled=log_scaled)
    if fn in ("lower_plus", "lower_minus"):
        return gamma_lower_neg(a, z, 1 if fn == "lower_plus" else -1, order, log_scaled=log_scaled)
    if fn == "Q":
        return q_ratio(a, z, order)
    if fn == "P":
        return p_ratio(a, z, order)
    if fn == "Ep":
        return exp_integral_p(a, z, order)
    raise DomainError(f"unknown function {fn!r}")


def result_dict(fn: str, a: float, z: float, res: EvalResult) -> dict:
    out = {"function": fn, "a": a, "z": z}
    if isinstance(res.value, ComplexValue):
        out["value"] = {"re": res.value.re, "im": res.value.im}
    else:
        out["value"] = res.value
    out.update(regime=res.regime.value, order_used=res.order_used,
               est_truncation=res.est_truncation, log_scale=res.log_scale)
    return out


def _cmd_eval(args, out) -> int:
    res = evaluate(args.fn, args.a, args.z, args.order, args.log_scaled)
    if args.format == "json":
        out.write(json.dumps(result_dict(args.fn, args.a, args.z, res), allow_nan=False) + "\n")
        return EXIT_OK
    if isinstance(res.value, ComplexValue):
        out.write(f"re: {fmt(res.value.re)}\nim: {fmt(res.value.im)}\n")
    else:
        out.write(f"value: {fmt(res.value)}\n")
    if res.log_scale:
        out.write(f"log_scale: {fmt(res.log_scale)}\n")
    out.write(f"regime: {res.regime.value}\norder_used: {res.order_used}\n"
              f"est_truncation: {res.est_truncation:.3g}\n")
    return EXIT_OK


def _cmd_table(args, out) -> int:
    rows = table_rows(args.a, args.z_from, args.z_to, args.step, args.order)
    if args.format == "json":
        data = [{"z": r.z, "gtilde": r.gtilde, "gamma_star": r.gamma_star, "residual": r.residual}
                for r in rows]
        out.write(json.dumps({"a": args.a, "rows": data}, allow_nan=False) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["z", "gtilde", "gamma_star", "residual"])
        for r in rows:
            w.writerow([repr(r.z), repr(r.gtilde), repr(r.gamma_star), repr(r.residual)])
    else:
        out.write(f"{'z':>8}  {'gtilde_a(z)':>24}  {'gamma*(-a,-z)':>25}  {'residual':>9}\n")
        for r in rows:
            out.write(f"{r.z:8.1f}  {r.gtilde:24.17g}  {r.gamma_star:25.17e}  {r.residual:9.1e}\n")
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    report = run_sweep(args.a, args.k_max, args.samples, args.seed, args.order)
    out.write(json.dumps(report.to_dict(), allow_nan=False) + "\n")
    return EXIT_OK


def _cmd_coeffs(args, out) -> int:
    table = default_table()
    if not 0 <= args.n_max <= table.max_order:
        raise UsageError(f"--n-max must be in 0..{table.max_order}")
    out.write(json.dumps(table_to_dict(table, args.n_max), allow_nan=False) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="negamma", description="Incomplete gamma functions with negative parameters.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    ev = sub.add_parser("eval", help="evaluate one function value")
    ev.add_argument("--fn", required=True, choices=FUNCTIONS)
    ev.add_argument("--a", "--p", dest="a", type=float, required=True,
                    help="parameter a (p for Ep)")
    ev.add_argument("--z", type=float, required=True)
    ev.add_argument("--order", type=int, default=DEFAULT_ORDER)
    ev.add_argument("--format", choices=("text", "json"), default="text")
    ev.add_argument("--log-scaled", action="store_true",
                    help="report value * exp(log_scale) instead of overflowing")
    ev.set_defaults(handler=_cmd_eval)

    tb = sub.add_parser("table", help="gtilde, gamma* and recursion residual over a z grid")
    tb.add_argument("--a", type=float, required=True)
    tb.add_argument("--z-from", type=float, required=True)
    tb.add_argument("--z-to", type=float, required=True)
    tb.add_argument("--step", type=float, default=1.0)
    tb.add_argument("--order", type=int, default=DEFAULT_ORDER)
    tb.add_argument("--format", choices=("text", "csv", "json"), default="text")
    tb.set_defaults(handler=_cmd_table)

    vf = sub.add_parser("verify", help="seeded recursion sweep around z = a")
    vf.add_argument("--a", type=float, required=True)
    vf.add_argument("--k-max", type=int, default=6)
    vf.add_argument("--samples", type=int, default=100)
    vf.add_argument("--seed", type=int, default=0)
    vf.add_argument("--order", type=int, default=DEFAULT_ORDER)
    vf.set_defaults(handler=_cmd_verify)

    co = sub.add_parser("coeffs", help="export gamma_n and C_n as exact rationals (JSON)")
    co.add_argument("--n-max", type=int, default=DEFAULT_ORDER)
    co.add_argument("--format", choices=("json",), default="json")
    co.set_defaults(handler=_cmd_coeffs)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        return args.handler(args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except DomainError as exc:
        err.write(f"domain error: {exc}\n")
        return EXIT_DOMAIN
    except (RangeOverflowError, OverflowError) as exc:
        err.write(f"overflow: {exc}\n")
        return EXIT_OVERFLOW
    except NegammaError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_ERROR
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
