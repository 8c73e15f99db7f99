"""``axicover`` command line: solve, verify, render, bench.

Exit codes: 0 success, 1 verification failure, 2 unreadable or malformed
input, 3 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import List, Optional

from . import __version__
from ._jit import BACKEND
from .bench import PATHS, doubling_ratios, records_csv, run_bench
from .dp_solver import SolveRequest, preprocess, solve, solve_all_budgets, solver_path
from .errors import AxicoverError, InvalidAlpha, InvalidMetric, ParseError
from .formats import ResultDocument, parse_points, read_text_file
from .geometry import Metric, check_alpha
from .oracle import enumerate_partitions_optimal, verify_covering
from .render import render_svg

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE = 2
EXIT_USAGE = 3

ORACLE_MAX_N = 12
COST_RTOL = 1e-6


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _metric_arg(text):
    try:
        return Metric.parse(text)
    except InvalidMetric as e:
        raise argparse.ArgumentTypeError(str(e))


def _alpha_arg(text):
    try:
        return check_alpha(float(text))
    except (ValueError, InvalidAlpha) as e:
        raise argparse.ArgumentTypeError(str(e))


def _positive_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _sizes_arg(text):
    return [_positive_int(t) for t in text.split(",") if t.strip()]


def _write(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_points(args):
    try:
        text = read_text_file(args.input)
    except OSError as e:
        raise ParseError(f"cannot read points: {e}") from None
    return parse_points(text, args.format)


def _load_result(path):
    try:
        text = read_text_file(path)
    except OSError as e:
        raise ParseError(f"cannot read result: {e}") from None
    return ResultDocument.from_json(text)


def _close(a: float, b: float, rtol: float = COST_RTOL) -> bool:
    return abs(a - b) <= rtol * max(abs(a), abs(b), 1e-300)


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------


def run_solve(args) -> ResultDocument:
    points = _load_points(args)
    if args.all_budgets and args.k is not None:
        raise UsageError("--k and --all-budgets are mutually exclusive")
    req = SolveRequest(points, args.alpha, args.metric, args.k)
    t0 = time.perf_counter()
    covering = solve(req)
    curve = None
    if args.all_budgets:
        curve = [{"k": i + 1, "total_cost": c.total_cost} for i, c in enumerate(solve_all_budgets(req))]
    elapsed = (time.perf_counter() - t0) * 1e3
    doc = ResultDocument.from_covering(
        covering, len(points), args.alpha, args.metric, args.k, solver_path(req), elapsed, curve
    )
    _write(doc.to_json(), args.out)
    return doc


def run_verify(args) -> int:
    points = preprocess(_load_points(args))
    doc = _load_result(args.result)
    covering = doc.covering()
    report = verify_covering(points, covering, args.tol, doc.alpha)
    cost_ok = _close(report.cost_recomputed, doc.total_cost) and doc.k == covering.k
    out = {
        "all_covered": report.all_covered,
        "max_uncovered_gap": report.max_uncovered_gap,
        "all_pinned": report.all_pinned,
        "cost_recomputed": report.cost_recomputed,
        "cost_reported": doc.total_cost,
        "cost_matches": cost_ok,
    }
    ok = report.all_covered and report.all_pinned and cost_ok
    if len(points) <= ORACLE_MAX_N:
        budget = doc.input_summary.get("budget")
        best = enumerate_partitions_optimal(points, doc.alpha, doc.metric, budget)
        oracle_ok = _close(report.cost_recomputed, best.total_cost) and _close(doc.total_cost, best.total_cost)
        out["oracle_cost"] = best.total_cost
        out["oracle_matches"] = oracle_ok
        ok = ok and oracle_ok
    out["verified"] = ok
    _write(json.dumps(out, indent=2) + "\n", args.out)
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def run_render(args) -> str:
    points = _load_points(args)
    doc = _load_result(args.result)
    svg = render_svg(points, doc.covering(), doc.metric)
    _write(svg, args.out)
    return svg


def run_bench_cmd(args):
    seed = args.seed
    if seed is None:
        env = os.environ.get("AXICOVER_SEED")
        try:
            seed = int(env) if env else 0
        except ValueError:
            raise UsageError(f"AXICOVER_SEED must be an integer, got {env!r}") from None
    paths = args.path or ["generic-lp"]
    if len(set(paths)) != len(paths):
        raise UsageError("each --path may be given once")
    if args.metric.is_inf and "generic-lp" in paths:
        raise UsageError("the generic-lp path needs a finite --metric")
    records = run_bench(args.sizes, paths, args.repeat, seed, args.alpha, args.metric, args.k)
    _write(records_csv(records), args.out)
    print(f"# backend: {BACKEND}", file=sys.stderr)
    for path, a, b, ratio in doubling_ratios(records):
        print(f"# {path}: t({b})/t({a}) = {ratio:.2f}", file=sys.stderr)
    return records


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="axicover", description="Minimum-sum covering of points by disks centered on the x-axis.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def io_args(p, out_help):
        p.add_argument("--in", dest="input", metavar="FILE", help="point file (default: stdin)")
        p.add_argument("--format", choices=("auto", "csv", "json"), default="auto")
        p.add_argument("--out", metavar="FILE", help=out_help)

    p = sub.add_parser("solve", help="compute an optimal covering")
    io_args(p, "result JSON (default: stdout)")
    p.add_argument("--alpha", type=_alpha_arg, required=True, help="cost exponent, >= 1")
    p.add_argument("--metric", type=_metric_arg, default=Metric(2.0), help="p >= 1 or 'inf' (default 2)")
    p.add_argument("--k", type=_positive_int, default=None, help="use at most K disks")
    p.add_argument("--all-budgets", action="store_true", help="also emit the cost for every k = 1..n")

    p = sub.add_parser("verify", help="check a result document against its points")
    io_args(p, "report JSON (default: stdout)")
    p.add_argument("--result", required=True, metavar="FILE")
    p.add_argument("--tol", type=float, default=1e-6)

    p = sub.add_parser("render", help="draw a covering as SVG")
    io_args(p, "SVG file (default: stdout)")
    p.add_argument("--result", required=True, metavar="FILE")

    p = sub.add_parser("bench", help="time solver paths over growing sizes")
    p.add_argument("--sizes", type=_sizes_arg, default=[512, 1024, 2048, 4096])
    p.add_argument("--repeat", type=_positive_int, default=5)
    p.add_argument("--seed", type=int, default=None, help="default: $AXICOVER_SEED or 0")
    p.add_argument("--path", action="append", choices=PATHS)
    p.add_argument("--metric", type=_metric_arg, default=Metric(2.0))
    p.add_argument("--alpha", type=_alpha_arg, default=1.0)
    p.add_argument("--k", type=_positive_int, default=4, help="budget for the budgeted path")
    p.add_argument("--out", metavar="FILE", help="CSV (default: stdout)")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "solve":
            run_solve(args)
            return EXIT_OK
        if args.command == "verify":
            if args.tol <= 0:
                raise UsageError("--tol must be positive")
            return run_verify(args)
        if args.command == "render":
            run_render(args)
            return EXIT_OK
        run_bench_cmd(args)
        return EXIT_OK
    except ParseError as e:
        print(f"axicover: parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (UsageError, AxicoverError, ValueError) as e:
        print(f"axicover: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
