"""Dynamic programs over contiguous groups of x-sorted points.

``A[i]`` is the cheapest covering of points ``i..n-1``; a group ``i..j`` is
covered by its smallest enclosing axis disk.  Among equal-cost splits the
largest ``j`` wins (exact float comparison, no epsilon).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np

from ._jit import njit
from .errors import InvalidMetric
from .geometry import AxisDisk, Metric, PointXY, check_alpha, cost_kernel
from .interval_tree import init_kernel, insert_kernel


@dataclass(frozen=True)
class Covering:
    disks: tuple = ()
    total_cost: float = 0.0

    @property
    def k(self) -> int:
        return len(self.disks)


@dataclass(frozen=True)
class SolveRequest:
    points: Sequence
    alpha: float = 1.0
    metric: Metric = field(default_factory=lambda: Metric(2.0))
    max_disks: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "alpha", check_alpha(self.alpha))
        if not isinstance(self.metric, Metric):
            object.__setattr__(self, "metric", Metric.parse(self.metric))
        if self.max_disks is not None and int(self.max_disks) < 1:
            raise ValueError(f"max_disks must be >= 1, got {self.max_disks!r}")


@dataclass
class DpTable:
    """Row values ``A[0..n]`` (``A[n] == 0``) and the chosen group end per row."""

    A: np.ndarray
    choice: np.ndarray


def preprocess(points: Sequence) -> List[PointXY]:
    """Mirror into ``y >= 0``, keep the tallest point per x, sort by x."""
    best = {}
    for q in points:
        x, y = float(q[0]), abs(float(q[1]))
        if x not in best or y > best[x]:
            best[x] = y
    return [PointXY(x, best[x]) for x in sorted(best)]


def _arrays(pts: Sequence[PointXY]):
    xs = np.fromiter((q.x for q in pts), dtype=np.float64, count=len(pts))
    ys = np.fromiter((q.y for q in pts), dtype=np.float64, count=len(pts))
    return xs, ys


# --------------------------------------------------------------------------
# kernels
# --------------------------------------------------------------------------


@njit(cache=True)
def unbounded_lp_kernel(xs, ys, p, alpha):
    n = xs.shape[0]
    A = np.zeros(n + 1)
    choice = np.zeros(n, dtype=np.int64)
    best_c = np.zeros(n)
    best_r = np.zeros(n)
    bnd = np.zeros(n + 1)
    sx = np.zeros(n + 1)
    sy = np.zeros(n + 1)
    cc = np.zeros(n + 1)
    cr = np.zeros(n + 1)
    amin = np.zeros(n + 1, dtype=np.int64)
    counters = np.zeros(1, dtype=np.int64)
    for i in range(n - 1, -1, -1):
        top = init_kernel(bnd, sx, sy, cc, cr, amin, xs[i], ys[i])
        best = cost_kernel(ys[i], alpha) + A[i + 1]
        bj = i
        bc = xs[i]
        br = ys[i]
        for j in range(i + 1, n):
            top = insert_kernel(bnd, sx, sy, cc, cr, amin, top, xs[j], ys[j], p, counters)
            m = amin[top]
            v = cost_kernel(cr[m], alpha) + A[j + 1]
            if v <= best:
                best = v
                bj = j
                bc = cc[m]
                br = cr[m]
        A[i] = best
        choice[i] = bj
        best_c[i] = bc
        best_r[i] = br
    return A, choice, best_c, best_r


@njit(cache=True)
def unbounded_linf_kernel(xs, ys, alpha):
    n = xs.shape[0]
    A = np.zeros(n + 1)
    choice = np.zeros(n, dtype=np.int64)
    best_c = np.zeros(n)
    best_r = np.zeros(n)
    for i in range(n - 1, -1, -1):
        ymax = ys[i]
        best = cost_kernel(ymax, alpha) + A[i + 1]
        bj = i
        br = ymax
        for j in range(i + 1, n):
            if ys[j] > ymax:
                ymax = ys[j]
            r = max(0.5 * (xs[j] - xs[i]), ymax)
            v = cost_kernel(r, alpha) + A[j + 1]
            if v <= best:
                best = v
                bj = j
                br = r
        A[i] = best
        choice[i] = bj
        # leftmost feasible square center
        best_c[i] = xs[bj] - br
        best_r[i] = br
    return A, choice, best_c, best_r


@njit(cache=True)
def group_disks_kernel(xs, ys, p):
    """Smallest enclosing disk of every contiguous group ``i..j`` (upper triangle)."""
    n = xs.shape[0]
    R = np.zeros((n, n))
    C = np.zeros((n, n))
    if math.isinf(p):
        for i in range(n):
            ymax = 0.0
            for j in range(i, n):
                if ys[j] > ymax:
                    ymax = ys[j]
                r = max(0.5 * (xs[j] - xs[i]), ymax)
                R[i, j] = r
                C[i, j] = xs[j] - r
        return R, C
    bnd = np.zeros(n + 1)
    sx = np.zeros(n + 1)
    sy = np.zeros(n + 1)
    cc = np.zeros(n + 1)
    cr = np.zeros(n + 1)
    amin = np.zeros(n + 1, dtype=np.int64)
    counters = np.zeros(1, dtype=np.int64)
    for i in range(n):
        top = init_kernel(bnd, sx, sy, cc, cr, amin, xs[i], ys[i])
        R[i, i] = ys[i]
        C[i, i] = xs[i]
        for j in range(i + 1, n):
            top = insert_kernel(bnd, sx, sy, cc, cr, amin, top, xs[j], ys[j], p, counters)
            m = amin[top]
            R[i, j] = cr[m]
            C[i, j] = cc[m]
    return R, C


@njit(cache=True)
def budget_table_kernel(R, alpha, kmax):
    """``A[m, i]``: cheapest covering of ``i..n-1`` with at most ``m`` groups."""
    n = R.shape[0]
    A = np.full((kmax + 1, n + 1), np.inf)
    choice = np.full((kmax + 1, n), -1, dtype=np.int64)
    for m in range(kmax + 1):
        A[m, n] = 0.0
    costs = np.zeros((n, n))
    for i in range(n):
        for j in range(i, n):
            costs[i, j] = cost_kernel(R[i, j], alpha)
    for m in range(1, kmax + 1):
        for i in range(n - 1, -1, -1):
            best = np.inf
            bj = -1
            for j in range(i, n):
                v = costs[i, j] + A[m - 1, j + 1]
                if v <= best:
                    best = v
                    bj = j
            A[m, i] = best
            choice[m, i] = bj
    return A, choice


# --------------------------------------------------------------------------
# public solvers
# --------------------------------------------------------------------------


def _reconstruct(choice, best_c, best_r, metric, total) -> Covering:
    disks = []
    i = 0
    n = choice.shape[0]
    while i < n:
        disks.append(AxisDisk(float(best_c[i]), float(best_r[i]), metric))
        i = int(choice[i]) + 1
    return Covering(tuple(disks), float(total))


def _as_request(req_or_points, alpha=None, metric=None, max_disks=None) -> SolveRequest:
    if isinstance(req_or_points, SolveRequest):
        return req_or_points
    return SolveRequest(
        list(req_or_points),
        1.0 if alpha is None else alpha,
        Metric(2.0) if metric is None else metric,
        max_disks,
    )


def solve_table(req: SolveRequest):
    """Unbounded DP on the normalized points; returns ``(points, DpTable, centers, radii)``."""
    pts = preprocess(req.points)
    xs, ys = _arrays(pts)
    if req.metric.is_inf:
        A, choice, bc, br = unbounded_linf_kernel(xs, ys, req.alpha)
    else:
        A, choice, bc, br = unbounded_lp_kernel(xs, ys, req.metric.p, req.alpha)
    return pts, DpTable(A, choice), bc, br


def solve_unbounded(req, alpha=None, metric=None) -> Covering:
    """Optimal covering with a free number of disks, finite p."""
    req = _as_request(req, alpha, metric)
    if req.metric.is_inf:
        raise InvalidMetric("use solve_linf for the L_inf metric")
    pts, table, bc, br = solve_table(req)
    if not pts:
        return Covering()
    return _reconstruct(table.choice, bc, br, req.metric, table.A[0])


def solve_linf(req, alpha=None) -> Covering:
    """Optimal covering by axis-centered squares."""
    req = _as_request(req, alpha, Metric(math.inf))
    if not req.metric.is_inf:
        raise InvalidMetric("solve_linf needs the L_inf metric")
    pts, table, bc, br = solve_table(req)
    if not pts:
        return Covering()
    return _reconstruct(table.choice, bc, br, req.metric, table.A[0])


def radii_cache(pts: Sequence[PointXY], metric: Metric):
    """``(R, C)``: radius and center of the smallest disk of every group ``i..j``."""
    xs, ys = _arrays(pts)
    return group_disks_kernel(xs, ys, metric.p)


def _budget_solutions(req: SolveRequest, kmax: Optional[int], only_last: bool) -> List[Covering]:
    pts = preprocess(req.points)
    n = len(pts)
    if n == 0:
        return []
    k = n if kmax is None else min(int(kmax), n)
    R, C = radii_cache(pts, req.metric)
    A, choice = budget_table_kernel(R, req.alpha, k)
    budgets = [k] if only_last else range(1, k + 1)
    out = []
    for m in budgets:
        disks = []
        i, left = 0, m
        while i < n:
            j = int(choice[left, i])
            disks.append(AxisDisk(float(C[i, j]), float(R[i, j]), req.metric))
            i = j + 1
            left -= 1
        out.append(Covering(tuple(disks), float(A[m, 0])))
    return out


def solve_with_budget(req, k: Optional[int] = None, alpha=None, metric=None) -> Covering:
    """Optimal covering using at most ``k`` disks (``k > n`` is clamped to ``n``)."""
    if isinstance(req, SolveRequest):
        if k is not None:
            req = SolveRequest(req.points, req.alpha, req.metric, k)
    else:
        req = _as_request(req, alpha, metric, k)
    if req.max_disks is None:
        raise ValueError("solve_with_budget needs a disk budget")
    sols = _budget_solutions(req, req.max_disks, only_last=True)
    return sols[0] if sols else Covering()


def solve_all_budgets(req, alpha=None, metric=None) -> List[Covering]:
    """Optimal coverings for every budget ``k = 1..n`` from one table fill."""
    req = _as_request(req, alpha, metric)
    return _budget_solutions(req, None, only_last=False)


def solve(req, alpha=None, metric=None, max_disks=None) -> Covering:
    """Dispatch on the request: budgeted, L_inf, or generic L_p."""
    req = _as_request(req, alpha, metric, max_disks)
    if req.max_disks is not None:
        return solve_with_budget(req)
    if req.metric.is_inf:
        return solve_linf(req)
    return solve_unbounded(req)


def solver_path(req: SolveRequest) -> str:
    if req.max_disks is not None:
        return "budgeted"
    return "linf" if req.metric.is_inf else "generic-lp"
