"""Wall-clock scaling of the solver paths."""

from __future__ import annotations

import csv
import io
import statistics
import time
from dataclasses import dataclass
from typing import Iterable, List, Sequence

from .dp_solver import SolveRequest, solve
from .geometry import Metric
from .oracle import InstanceSpec, random_instance

PATHS = ("generic-lp", "linf", "budgeted")
CSV_HEADER = ("n", "repeat", "median_wall_time_ms", "solver_path")


@dataclass(frozen=True)
class BenchRecord:
    n: int
    repeat: int
    median_wall_time_ms: float
    solver_path: str


def _request(points, path: str, alpha: float, metric: Metric, budget: int) -> SolveRequest:
    if path == "linf":
        return SolveRequest(points, alpha, Metric("inf"))
    if path == "budgeted":
        return SolveRequest(points, alpha, metric, budget)
    if metric.is_inf:
        raise ValueError("the generic-lp path needs a finite metric")
    return SolveRequest(points, alpha, metric)


def time_solve(req: SolveRequest) -> float:
    t0 = time.perf_counter()
    solve(req)
    return (time.perf_counter() - t0) * 1e3


def warm_up(paths: Iterable[str], alpha: float, metric: Metric) -> None:
    pts = random_instance(InstanceSpec(0, 8))
    for path in paths:
        solve(_request(pts, path, alpha, metric, 2))


def run_bench(
    sizes: Sequence[int],
    paths: Sequence[str] = ("generic-lp",),
    repeat: int = 5,
    seed: int = 0,
    alpha: float = 1.0,
    metric: Metric = Metric(2.0),
    budget: int = 4,
) -> List[BenchRecord]:
    """Median solve time per (size, path) over ``repeat`` runs on one seeded instance."""
    if repeat < 1:
        raise ValueError("repeat must be >= 1")
    for path in paths:
        if path not in PATHS:
            raise ValueError(f"unknown solver path {path!r}")
    warm_up(paths, alpha, metric)
    records = []
    for path in paths:
        for n in sizes:
            pts = random_instance(InstanceSpec(seed + int(n), int(n), (0.0, 100.0), (0.0, 10.0)))
            req = _request(pts, path, alpha, metric, budget)
            times = [time_solve(req) for _ in range(repeat)]
            records.append(BenchRecord(int(n), repeat, statistics.median(times), path))
    return records


def doubling_ratios(records: Sequence[BenchRecord]) -> List[tuple]:
    """``(path, n, 2n, t(2n)/t(n))`` for each adjacent size pair where the size doubles."""
    out = []
    by_path = {}
    for rec in records:
        by_path.setdefault(rec.solver_path, []).append(rec)
    for path, recs in by_path.items():
        recs = sorted(recs, key=lambda r: r.n)
        for a, b in zip(recs, recs[1:]):
            if b.n == 2 * a.n and a.median_wall_time_ms > 0:
                out.append((path, a.n, b.n, b.median_wall_time_ms / a.median_wall_time_ms))
    return out


def records_csv(records: Sequence[BenchRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in records:
        w.writerow((r.n, r.repeat, f"{r.median_wall_time_ms:.4f}", r.solver_path))
    return buf.getvalue()
