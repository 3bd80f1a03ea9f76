"""Command-line interface: ``chebcube {rule,integrate,hyper,cc,bench}``.

Exit codes: 0 success, 2 invalid arguments, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

import numpy as np

from . import bench
from .cc3 import cc_rule, sum_abs_weights
from .cubature import Measure, SigmaPattern, build_sigma_rule
from .errors import ConvergenceError, DomainError
from .hyperinterp3 import (CONTROL_GRID_SIZE, control_grid, control_points, hyper_coeffs,
                           hyper_eval_grid, hyper_node_set, relative_error)

EXIT_OK, EXIT_USAGE, EXIT_NUMERICAL = 0, 2, 3


class _Usage(Exception):
    pass


def _sigma(text: str) -> SigmaPattern:
    try:
        return SigmaPattern.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _fn(text: str) -> bench.TestFunction:
    try:
        return bench.get_function(text)
    except KeyError as exc:
        raise argparse.ArgumentTypeError(str(exc.args[0])) from exc


def _measure(text: str) -> Measure:
    key = text.upper()
    aliases = {"CHEBYSHEV": Measure.CHEBYSHEV_NORMALIZED, "LEBESGUE": Measure.LEBESGUE}
    if key in aliases:
        return aliases[key]
    try:
        return Measure(key)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"unknown measure {text!r}") from exc


def _csv_list(text: str) -> list[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def _write_rows(path, header, rows) -> None:
    try:
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(header)
            w.writerows(rows)
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc


def _rule_rows(nodes, weights):
    return [[bench.fmt(v) for v in p] + [bench.fmt(w)] for p, w in zip(nodes, weights)]


def _report(approx: float, reference: float) -> None:
    print(f"approx={bench.fmt(approx)}")
    print(f"reference={bench.fmt(reference)}")
    print(f"rel_error={bench.fmt(abs(approx - reference) / max(abs(reference), 1e-300))}")


def _build_rule(args):
    """Nodes and weights for the rule flags shared by ``rule`` and ``integrate``."""
    if args.kind != "sigma":
        r = bench.tensor_rule(args.kind.upper(), args.n, args.dim)
        return r.nodes, r.weights, r.measure
    if args.sigma is None:
        args.sigma = SigmaPattern(("E",) * args.dim)
    if len(args.sigma) != args.dim:
        raise _Usage(f"--sigma {args.sigma} does not have length --dim {args.dim}")
    if args.measure == Measure.LEBESGUE:
        if args.dim != 3:
            raise _Usage("the Lebesgue (Clenshaw-Curtis-like) rule is three-dimensional")
        r = cc_rule(args.n, args.sigma)
        return r.points, r.weights, Measure.LEBESGUE
    if args.n < 2:
        raise _Usage("the sigma rule needs --n >= 2")
    r = build_sigma_rule(args.dim, args.n, args.sigma)
    return r.nodes, r.weights, r.measure


def cmd_rule(args) -> int:
    nodes, weights, _ = _build_rule(args)
    header = [f"x{i + 1}" for i in range(nodes.shape[1])] + ["weight"]
    rows = _rule_rows(nodes, weights)
    if args.out:
        _write_rows(args.out, header, rows)
        print(f"wrote {len(rows)} nodes to {args.out}")
    else:
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    return EXIT_OK


def cmd_integrate(args) -> int:
    if args.dim != 3:
        raise _Usage("test functions are defined on the 3-cube; use --dim 3")
    nodes, weights, measure = _build_rule(args)
    approx = float(np.dot(weights, args.fn(nodes)))
    ref = bench.reference_integral(args.fn, measure)
    print(f"nodes={len(weights)}")
    _report(approx, ref.value)
    return EXIT_OK


def cmd_hyper(args) -> int:
    if args.n < 1:
        raise _Usage("--n must be >= 1")
    if len(args.sigma) != 3:
        raise _Usage("--sigma must have length 3")
    coeffs = hyper_coeffs(args.fn, args.n, args.sigma, vectorized=True)
    if args.coeffs_out:
        rows = [[str(a) for a in alpha] + [bench.fmt(c)]
                for alpha, c in zip(coeffs.alphas, coeffs.values)]
        _write_rows(args.coeffs_out, ["alpha1", "alpha2", "alpha3", "c"], rows)
    m = args.control_grid
    approx = hyper_eval_grid(coeffs, control_grid(m)).ravel()
    err = relative_error(approx, args.fn(control_points(m)))
    print(f"nodes={len(hyper_node_set(args.n, args.sigma))}")
    print(f"coefficients={len(coeffs)}")
    print(f"control_grid={m}^3")
    print(f"rel_error={bench.fmt(err)}")
    return EXIT_OK


def cmd_cc(args) -> int:
    if args.n < 1:
        raise _Usage("--n must be >= 1")
    if len(args.sigma) != 3:
        raise _Usage("--sigma must have length 3")
    if args.fn is None and args.weights_out is None:
        raise _Usage("cc needs --fn and/or --weights-out")
    rule = cc_rule(args.n, args.sigma)
    if args.weights_out:
        _write_rows(args.weights_out, ["x1", "x2", "x3", "lambda"],
                    _rule_rows(rule.points, rule.weights))
    print(f"nodes={len(rule)}")
    print(f"sum_abs_weights={bench.fmt(sum_abs_weights(rule))}")
    if args.fn is not None:
        approx = float(np.dot(rule.weights, args.fn(rule.points)))
        _report(approx, bench.reference_integral(args.fn, Measure.LEBESGUE).value)
    return EXIT_OK


def cmd_bench(args) -> int:
    try:
        rules = [bench.validate_rule_name(r) for r in args.rules]
        functions = [bench.get_function(f).id for f in args.suite]
    except (ValueError, KeyError) as exc:
        raise _Usage(str(exc)) from exc
    if args.n_min < 1 or args.n_max < args.n_min or args.stride < 1:
        raise _Usage("need 1 <= --n-min <= --n-max and --stride >= 1")
    config = bench.BenchConfig(functions=functions, rules=rules, n_min=args.n_min,
                               n_max=args.n_max, stride=args.stride, measure=args.measure,
                               out=args.out)
    records = bench.run_benchmark(config)
    if args.out is None:
        sys.stdout.write(bench.bench_csv_text(records))
    else:
        print(f"wrote {len(records)} records to {args.out}")
    return EXIT_OK


def _add_rule_flags(p, with_measure=True):
    p.add_argument("--dim", type=int, default=3)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sigma", type=_sigma, default=None, help="pattern over {E,O}, e.g. EEO")
    p.add_argument("--kind", default="sigma",
                   choices=["sigma"] + [k.lower() for k in bench.TENSOR_KINDS],
                   help="sigma rule (default) or a tensor-product baseline")
    if with_measure:
        p.add_argument("--measure", type=_measure, default=Measure.CHEBYSHEV_NORMALIZED,
                       help="chebyshev (sigma rule) or lebesgue (Clenshaw-Curtis-like rule)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chebcube", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rule", help="write cubature nodes and weights as CSV")
    _add_rule_flags(p)
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_rule)

    p = sub.add_parser("integrate", help="integrate a test function")
    _add_rule_flags(p)
    p.add_argument("--fn", type=_fn, required=True)
    p.set_defaults(func=cmd_integrate)

    p = sub.add_parser("hyper", help="total-degree hyperinterpolation in the 3-cube")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sigma", type=_sigma, default=SigmaPattern.parse("EEE"))
    p.add_argument("--fn", type=_fn, required=True)
    p.add_argument("--coeffs-out", type=Path)
    p.add_argument("--control-grid", type=int, default=CONTROL_GRID_SIZE)
    p.set_defaults(func=cmd_hyper)

    p = sub.add_parser("cc", help="Clenshaw-Curtis-like rule for the Lebesgue measure")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sigma", type=_sigma, default=SigmaPattern.parse("EEE"))
    p.add_argument("--fn", type=_fn)
    p.add_argument("--weights-out", type=Path)
    p.set_defaults(func=cmd_cc)

    p = sub.add_parser("bench", help="run the error-vs-cost benchmark and write CSV")
    p.add_argument("--suite", type=_csv_list, default=[f.id for f in bench.test_suite()])
    p.add_argument("--rules", type=_csv_list,
                   default=list(bench.CHEB_RULES + bench.LEBESGUE_RULES))
    p.add_argument("--sigma", type=_sigma, default=None,
                   help="pattern for the sigma_/cc_ rules (replaces EEE)")
    p.add_argument("--n-min", type=int, default=bench.DEFAULT_N_RANGE[0])
    p.add_argument("--n-max", type=int, default=bench.DEFAULT_N_RANGE[1])
    p.add_argument("--stride", type=int, default=1)
    p.add_argument("--measure", type=lambda s: _measure(s).value, default=None)
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if getattr(args, "command", None) == "bench" and args.sigma is not None:
        args.rules = [r.split("_", 1)[0] + f"_{args.sigma}" if r.startswith(("sigma_", "cc_"))
                      else r for r in args.rules]
    try:
        return args.func(args)
    except _Usage as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConvergenceError, DomainError, ArithmeticError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except ValueError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


cli_main = main

if __name__ == "__main__":
    sys.exit(main())
