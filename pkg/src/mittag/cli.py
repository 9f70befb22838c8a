"""Command-line front end: ``eval``, ``diffuse`` and ``verify``.

Exit codes: 0 success, 1 verification failure, 2 usage error.  Numeric
failures at individual grid points are reported in the ``status`` column
and do not change the exit code.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Callable, Sequence, TextIO

from .diffusion import DiffusionProblem, evolve
from .errors import CancellationLoss, MaxTermsExceeded, NotConverged
from .heat import heat_poly, heat_poly_eval
from .laguerre import laguerre_eval, laguerre_poly
from .levy import LevyDensity, SubordinationKernel, levy_pdf, subordination_kernel
from .mlf import MlfParams, WrightParams, mlf, wright
from .series import EvalResult
from .verify import SUITES, format_report, run_suite

__all__ = ["main", "build_parser"]

# inputs each function needs besides the x grid, in output-column order
_FUNCTION_FLAGS = {
    "mlf": ("alpha",),
    "wright": ("alpha", "beta"),
    "heat": ("n", "alpha"),
    "laguerre": ("n", "alpha"),
    "levy": ("alpha",),
    "kernel": ("alpha", "t"),
}
# functions taking a second variable y
_WITH_Y = ("heat", "laguerre")


class UsageError(Exception):
    pass


def _fmt(v) -> str:
    if isinstance(v, int):
        return str(v)
    return f"{v:.17g}"


def _x_range(text: str) -> list[float]:
    try:
        a, b, count = text.split(":")
        a, b, n = float(a), float(b), int(count)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a:b:count, got {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("count must be at least 1")
    if n == 1:
        return [a]
    return [a + (b - a) * i / (n - 1) for i in range(n)]


def _coefficients(text: str) -> list[float]:
    try:
        return [float(c) for c in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _evaluator(name: str, args: argparse.Namespace) -> Callable[[float], EvalResult]:
    tol = args.tol
    if name == "mlf":
        p = MlfParams(args.alpha, series_tol=tol)
        return lambda x: mlf(p, x)
    if name == "wright":
        w = WrightParams(args.alpha, args.beta, series_tol=tol)
        return lambda x: wright(w, x)
    if name == "heat":
        h = heat_poly(args.n, args.alpha)
        return lambda x: heat_poly_eval(h, x, args.y)
    if name == "laguerre":
        L = laguerre_poly(args.n, args.alpha)
        return lambda x: laguerre_eval(L, x, args.y)
    if name == "levy":
        d = LevyDensity(args.alpha, series_tol=tol)
        return lambda x: levy_pdf(d, x)
    k = SubordinationKernel(args.alpha, args.t, series_tol=tol)
    return lambda x: subordination_kernel(k, x)


def _record(fn: Callable[[float], EvalResult], x: float) -> tuple[float, float, str]:
    try:
        r = fn(x)
        return r.value, r.abs_error_estimate, "ok"
    except CancellationLoss as exc:
        res = exc.result
        status = "cancellation_loss"
    except (NotConverged, MaxTermsExceeded) as exc:
        res = getattr(exc, "result", None)
        status = "not_converged"
    except OverflowError:
        return math.inf, math.nan, "not_converged"
    if res is None:
        return math.nan, math.inf, status
    return res.value, res.abs_error_estimate, status


def cmd_eval(args: argparse.Namespace, out: TextIO) -> int:
    name = args.function
    needed = _FUNCTION_FLAGS[name] + (("y",) if name in _WITH_Y else ())
    missing = [f for f in needed if getattr(args, f) is None]
    if missing:
        raise UsageError(f"eval {name} needs --{' --'.join(missing)}")
    if (args.x is None) == (args.x_range is None):
        raise UsageError("give exactly one of --x and --x-range")
    xs = [args.x] if args.x is not None else args.x_range
    try:
        fn = _evaluator(name, args)
        rows = []
        for x in xs:
            rows.append((x,) + _record(fn, x))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    fixed = [(f, getattr(args, f)) for f in needed]
    if args.format == "json":
        records = [
            {
                "inputs": dict(fixed + [("x", x)]),
                "value": v if math.isfinite(v) else None,
                "abs_error_estimate": e if math.isfinite(e) else None,
                "status": s,
            }
            for x, v, e, s in rows
        ]
        out.write(json.dumps(records, indent=2) + "\n")
        return 0
    out.write(",".join([f for f, _ in fixed] + ["x", "value", "abs_error_estimate", "status"]) + "\n")
    for x, v, e, s in rows:
        cells = [_fmt(val) for _, val in fixed] + [_fmt(x), _fmt(v), _fmt(e), s]
        out.write(",".join(cells) + "\n")
    return 0


def cmd_diffuse(args: argparse.Namespace, out: TextIO) -> int:
    if args.points < 1:
        raise UsageError("--points must be at least 1")
    if len(args.init) > 171:
        raise UsageError("initial polynomial degree must not exceed 170")
    try:
        F = evolve(DiffusionProblem.from_coefficients(args.alpha, args.k, args.init), args.t)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    n = args.points
    xs = [args.xmin] if n == 1 else [args.xmin + (args.xmax - args.xmin) * i / (n - 1) for i in range(n)]
    rows = [(x, F.eval(x)) for x in xs]
    if args.format == "json":
        records = [{"x": x, "F": r.value, "abs_error_estimate": r.abs_error_estimate} for x, r in rows]
        out.write(json.dumps(records, indent=2) + "\n")
        return 0
    out.write("x,F,abs_error_estimate\n")
    for x, r in rows:
        out.write(f"{_fmt(x)},{_fmt(r.value)},{_fmt(r.abs_error_estimate)}\n")
    return 0


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    results = run_suite(args.suite, args.tol)
    if args.format == "json":
        records = [
            {
                "suite": suite,
                "identity": c.name,
                "grid": c.grid,
                "max_error": c.max_error if math.isfinite(c.max_error) else None,
                "tol": c.tol,
                "passed": c.passed,
            }
            for suite, c in results
        ]
        out.write(json.dumps(records, indent=2) + "\n")
        ok = all(c.passed for _, c in results)
    else:
        ok = format_report(results, out)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")

    parser = argparse.ArgumentParser(prog="mittag", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", parents=[common], help="evaluate a function at points or on a grid")
    ev.add_argument("function", choices=tuple(_FUNCTION_FLAGS))
    ev.add_argument("--alpha", type=float)
    ev.add_argument("--beta", type=float)
    ev.add_argument("--n", type=int)
    ev.add_argument("--x", type=float)
    ev.add_argument("--x-range", type=_x_range, metavar="A:B:COUNT")
    ev.add_argument("--y", type=float)
    ev.add_argument("--t", type=float)
    ev.add_argument("--tol", type=float, default=1e-10, help="series tolerance (default 1e-10)")
    ev.set_defaults(handler=cmd_eval)

    df = sub.add_parser("diffuse", parents=[common], help="sample the evolved profile F(x, t)")
    df.add_argument("--alpha", type=float, required=True)
    df.add_argument("--k", type=float, default=1.0)
    df.add_argument("--t", type=float, required=True)
    df.add_argument("--init", type=_coefficients, required=True, metavar="C0,C1,...")
    df.add_argument("--xmin", type=float, required=True)
    df.add_argument("--xmax", type=float, required=True)
    df.add_argument("--points", type=int, required=True)
    df.add_argument("--tol", type=float, default=1e-10, help="accepted for uniformity; the solver is exact")
    df.set_defaults(handler=cmd_diffuse)

    vf = sub.add_parser("verify", parents=[common], help="run the identity-verification suites")
    vf.add_argument("--suite", choices=("all",) + tuple(SUITES), default="all")
    vf.add_argument("--tol", type=float, default=None, help="override every check tolerance")
    vf.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args, out)
    except UsageError as exc:
        parser.error(str(exc))
    return 2  # unreachable: parser.error exits


if __name__ == "__main__":
    sys.exit(main())
