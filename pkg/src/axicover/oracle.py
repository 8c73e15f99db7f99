"""Exhaustive ground truth for small instances.

Nothing here touches the interval structure: group disks come from the
ternary-search minimizer in :mod:`axicover.geometry`, and every contiguous
partition of the sorted points is tried.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ._jit import njit
from .dp_solver import Covering
from .errors import TooLarge
from .geometry import (
    AxisDisk,
    Metric,
    PointXY,
    bruteforce_disk_kernel,
    check_alpha,
    cost_kernel,
    dist_kernel,
)

MAX_ORACLE_N = 15


@dataclass(frozen=True)
class VerificationReport:
    all_covered: bool
    max_uncovered_gap: float
    all_pinned: bool
    cost_recomputed: float


@dataclass(frozen=True)
class InstanceSpec:
    seed: int
    n: int
    x_range: Tuple[float, float] = (0.0, 100.0)
    y_range: Tuple[float, float] = (0.0, 10.0)
    distribution: str = "uniform"

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if self.distribution not in ("uniform", "clustered", "collinear"):
            raise ValueError(f"unknown distribution {self.distribution!r}")
        if self.y_range[0] < 0:
            raise ValueError("y_range must be non-negative")
        if self.n >= 2 and not (self.x_range[0] < self.x_range[1] and self.y_range[0] <= self.y_range[1]):
            raise ValueError("degenerate ranges")


@njit(cache=True)
def _group_disks(xs, ys, p):
    n = xs.shape[0]
    R = np.zeros((n, n))
    C = np.zeros((n, n))
    for i in range(n):
        for j in range(i, n):
            c, r = bruteforce_disk_kernel(xs[i : j + 1], ys[i : j + 1], p)
            R[i, j] = r
            C[i, j] = c
    return R, C


@njit(cache=True)
def _best_partition(R, alpha, max_parts):
    """Bit ``g`` of the mask set means a cut between points ``g`` and ``g + 1``."""
    n = R.shape[0]
    best = np.inf
    best_mask = -1
    for mask in range(1 << (n - 1)):
        parts = 1
        for g in range(n - 1):
            if (mask >> g) & 1:
                parts += 1
        if parts > max_parts:
            continue
        total = 0.0
        start = 0
        for g in range(n - 1):
            if (mask >> g) & 1:
                total += cost_kernel(R[start, g], alpha)
                start = g + 1
        total += cost_kernel(R[start, n - 1], alpha)
        if total < best:
            best = total
            best_mask = mask
    return best, best_mask


def enumerate_partitions_optimal(
    points: Sequence, alpha: float, metric, max_parts: Optional[int] = None
) -> Covering:
    """Best covering over all contiguous partitions of the x-sorted points.

    ``points`` must already be normalized (sorted by x, ``y >= 0``).
    """
    alpha = check_alpha(alpha)
    metric = metric if isinstance(metric, Metric) else Metric.parse(metric)
    n = len(points)
    if n > MAX_ORACLE_N:
        raise TooLarge(f"oracle enumerates 2^(n-1) partitions; n = {n} > {MAX_ORACLE_N}")
    if n == 0:
        return Covering()
    xs = np.array([q[0] for q in points], dtype=np.float64)
    ys = np.abs(np.array([q[1] for q in points], dtype=np.float64))
    R, C = _group_disks(xs, ys, metric.p)
    best, mask = _best_partition(R, alpha, n if max_parts is None else int(max_parts))
    disks = []
    start = 0
    for g in range(n):
        if g == n - 1 or (mask >> g) & 1:
            disks.append(AxisDisk(float(C[start, g]), float(R[start, g]), metric))
            start = g + 1
    return Covering(tuple(disks), float(best))


def verify_covering(points: Sequence, c: Covering, tol: float = 1e-6, alpha: float = 1.0) -> VerificationReport:
    """Coverage, pinned-boundary certificate and recomputed cost of ``c``.

    A point's gap is its distance beyond the nearest disk boundary (its full
    distance to the axis when there are no disks).  A disk is pinned when some
    point lies within ``tol`` of its boundary.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    alpha = check_alpha(alpha)
    disks = list(c.disks)
    worst = 0.0
    for q in points:
        x, y = float(q[0]), abs(float(q[1]))
        if disks:
            gap = min(dist_kernel(d.center_x, x, y, d.metric.p) - d.radius for d in disks)
        else:
            gap = y
        worst = max(worst, gap)
    pinned = True
    for d in disks:
        slack = min(
            (abs(dist_kernel(d.center_x, float(q[0]), abs(float(q[1])), d.metric.p) - d.radius) for q in points),
            default=math.inf,
        )
        if slack > tol:
            pinned = False
            break
    recomputed = math.fsum(cost_kernel(d.radius, alpha) for d in disks)
    return VerificationReport(worst <= tol, float(max(worst, 0.0)), pinned, float(recomputed))


def random_instance(spec: InstanceSpec) -> List[PointXY]:
    """Seeded point set with distinct x-coordinates and ``y >= 0``."""
    rng = np.random.default_rng(spec.seed)
    x0, x1 = spec.x_range
    y0, y1 = spec.y_range
    xs: List[float] = []
    seen = set()
    if spec.distribution == "clustered":
        k = max(1, int(rng.integers(1, 5)))
        centers = rng.uniform(x0, x1, size=k)
        width = 0.03 * (x1 - x0)
    while len(xs) < spec.n:
        if spec.distribution == "clustered":
            x = float(np.clip(rng.normal(centers[rng.integers(k)], width), x0, x1))
        else:
            x = float(rng.uniform(x0, x1))
        if x not in seen:
            seen.add(x)
            xs.append(x)
    if spec.distribution == "collinear":
        a, b = rng.uniform(y0, y1, size=2)
        span = (x1 - x0) or 1.0
        ys = [float(a + (b - a) * (x - x0) / span) for x in xs]
    else:
        ys = [float(v) for v in rng.uniform(y0, y1, size=len(xs))]
    return [PointXY(x, y) for x, y in zip(xs, ys)]
