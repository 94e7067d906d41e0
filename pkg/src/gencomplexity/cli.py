"""Command-line interface: ``compute``, ``figure``, ``table-sqwell`` and ``verify``.

Exit codes: 0 success, 1 verification failure, 2 argument error,
3 numerical divergence, 4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

from .complexity import complexity
from .figures import FIGURE_IDS, figure_rows, fmt, rows_to_csv
from .orders import OrderParam
from .quadrature import DivergenceError, QuadratureSpec
from .quantum import (
    HydrogenState,
    OscillatorState,
    SquareWellState,
    box_complexity,
    hydrogen_density,
    oscillator_density,
    square_well_density,
    square_well_g,
)
from .verification import SUITES, run_suite

EXIT_OK, EXIT_VERIFY, EXIT_ARGS, EXIT_DIVERGENCE, EXIT_IO = 0, 1, 2, 3, 4
SQWELL_ALPHAS = tuple(0.25 * i for i in range(33))


class ArgumentError(ValueError):
    pass


def _order(token: str) -> OrderParam:
    try:
        return OrderParam.of(token)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _json_number(x: float):
    return x if math.isfinite(x) else ("inf" if x > 0 else "-inf")


def _order_json(order: OrderParam):
    return _json_number(order.value)


def _build_density(args):
    system = args.system
    if system == "hydrogen":
        _require(args, "n", "l")
        state = HydrogenState(args.n, args.l, args.m, args.space)
        return state, {"n": state.n, "l": state.l, "m": state.m}, hydrogen_density(state)
    if system == "oscillator":
        _require(args, "n", "l")
        state = OscillatorState(args.n, args.l, args.m, args.strength, args.space)
        return (state, {"n": state.n, "l": state.l, "m": state.m, "lambda": state.strength},
                oscillator_density(state))
    _require(args, "k")
    if args.space != "position":
        raise ArgumentError("the square well is only available in position space")
    state = SquareWellState(args.k, args.L, args.d)
    info = {"k": state.k, "L": state.L, "d": state.d}
    return state, info, (square_well_density(SquareWellState(state.k, state.L)))


def _require(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise ArgumentError(f"--system {args.system} needs " + ", ".join("--" + m for m in missing))


def cmd_compute(args) -> int:
    try:
        state, info, f = _build_density(args)
    except (ArgumentError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGS
    spec = QuadratureSpec(rel_tol=args.rel_tol)
    try:
        res = complexity(f, args.alpha, args.beta, spec)
    except DivergenceError as exc:
        print(f"divergence: {exc}", file=sys.stderr)
        return EXIT_DIVERGENCE
    value = res.value
    r_alpha, r_beta = res.r_alpha.value, res.r_beta.value
    if args.system == "sqwell" and state.d > 1:
        # a d-dimensional cubic box factors into d identical wells
        d = state.d
        value = value ** d
        r_alpha, r_beta = d * r_alpha, d * r_beta
    doc = {
        "system": args.system,
        "state": info,
        "space": args.space,
        "alpha": _order_json(res.r_alpha.order),
        "beta": _order_json(res.r_beta.order),
        "complexity": _json_number(value),
        "r_alpha": _json_number(r_alpha),
        "r_beta": _json_number(r_beta),
        "error_estimate": _json_number(res.error_estimate),
        "units": "atomic",
    }
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["system", "space", "alpha", "beta", "complexity", "r_alpha", "r_beta",
                    "error_estimate"])
        w.writerow([args.system, args.space, str(res.r_alpha.order), str(res.r_beta.order),
                    fmt(value), fmt(r_alpha), fmt(r_beta), fmt(res.error_estimate)])
        text = buf.getvalue()
    else:
        text = json.dumps(doc, indent=2) + "\n"
    return _emit(text, args.output)


def _emit(text: str, path) -> int:
    if path is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        Path(path).write_text(text)
    except OSError as exc:
        print(f"error: cannot write {path}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def cmd_figure(args) -> int:
    ids = FIGURE_IDS if args.figure_id == "all" else (args.figure_id,)
    out = args.output
    if len(ids) > 1:
        if out is None:
            print("error: figure all needs -o <directory>", file=sys.stderr)
            return EXIT_ARGS
        try:
            Path(out).mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            print(f"error: cannot create {out}: {exc}", file=sys.stderr)
            return EXIT_IO
    for fid in ids:
        text = rows_to_csv(figure_rows(fid, workers=args.workers))
        target = out if len(ids) == 1 else str(Path(out) / f"{fid}.csv")
        code = _emit(text, target)
        if code:
            return code
    return EXIT_OK


def cmd_table_sqwell(args) -> int:
    rows = []
    for a in SQWELL_ALPHAS:
        g = square_well_g(a)
        rows.append((a, 2.0 * g, box_complexity(a, args.d), g))
    if args.format == "json":
        text = json.dumps([{"alpha": a, "complexity": c, "box_complexity": b, "g": g}
                           for a, c, b, g in rows], indent=2) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["alpha", "complexity", f"box_complexity_d{args.d}", "g"])
        for a, c, b, g in rows:
            w.writerow([fmt(a), fmt(c), fmt(b), fmt(g)])
        text = buf.getvalue()
    return _emit(text, args.output)


def cmd_verify(args) -> int:
    checks = run_suite(args.suite, args.tol)
    for c in checks:
        print(c.line())
    failed = sum(not c.passed for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} checks passed", file=sys.stderr)
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gencomplexity",
        description="Generalized Rényi-difference complexity of quantum and model densities.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="complexity of a single state")
    p.add_argument("--system", choices=("hydrogen", "oscillator", "sqwell"), required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--k", type=int)
    p.add_argument("--lambda", dest="strength", type=float, default=1.0)
    p.add_argument("--L", type=float, default=1.0, help="square-well width")
    p.add_argument("--d", type=int, default=1, help="square-well box dimension")
    p.add_argument("--space", choices=("position", "momentum"), default="position")
    p.add_argument("--alpha", type=_order, required=True, help="order: number, 0, 1 or inf")
    p.add_argument("--beta", type=_order, default=OrderParam.of("inf"))
    p.add_argument("--rel-tol", type=float, default=1e-10)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("figure", help="CSV rows of a complexity-versus-|m| figure")
    p.add_argument("figure_id", choices=FIGURE_IDS + ("all",))
    p.add_argument("-o", "--output", help="CSV file (directory for 'all')")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("table-sqwell", help="square-well complexity over alpha = 0, 0.25, ..., 8")
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_table_sqwell)

    p = sub.add_parser("verify", help="run property-verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--tol", type=float, default=None,
                   help="override every non-strict check tolerance")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits on bad arguments and on --help
        return exc.code if isinstance(exc.code, int) else EXIT_ARGS
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
