"""L_p primitives for disks centered on the x-axis.

All kernels take the metric exponent as a float ``p`` where ``p = inf`` selects
the L_inf (square) metric.  Points are assumed to satisfy ``y >= 0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np

from ._jit import njit
from .errors import EmptyInput, InvalidAlpha, InvalidMetric, NonUniqueBisector

# crossing kinds returned by the bisector kernel
CROSS_FINITE = 0
CROSS_NEG_INF = -1  # the right point is never strictly farther
CROSS_POS_INF = 1  # the right point is farther everywhere

_BRACKET_EXPANSIONS = 1100
_ROOT_MAX_ITER = 200


class PointXY(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class Metric:
    """L_p selector; ``p = math.inf`` is the L_inf metric."""

    p: float

    def __post_init__(self):
        p = float(self.p)
        if math.isnan(p) or p < 1.0:
            raise InvalidMetric(f"metric exponent must satisfy p >= 1, got {self.p!r}")
        object.__setattr__(self, "p", p)

    @classmethod
    def parse(cls, text) -> "Metric":
        if isinstance(text, Metric):
            return text
        if isinstance(text, str):
            t = text.strip().lower()
            if t in ("inf", "infinity", "linf", "max"):
                return cls(math.inf)
            try:
                return cls(float(t))
            except ValueError:
                raise InvalidMetric(f"cannot parse metric {text!r}") from None
        return cls(float(text))

    @property
    def is_inf(self) -> bool:
        return math.isinf(self.p)

    def __str__(self):
        if self.is_inf:
            return "inf"
        return format(self.p, "g")

    def to_json(self):
        return "inf" if self.is_inf else self.p


L1 = Metric(1.0)
L2 = Metric(2.0)
LINF = Metric(math.inf)


def check_alpha(alpha) -> float:
    a = float(alpha)
    if math.isnan(a) or math.isinf(a) or a < 1.0:
        raise InvalidAlpha(f"cost exponent must satisfy alpha >= 1, got {alpha!r}")
    return a


@dataclass(frozen=True)
class AxisDisk:
    center_x: float
    radius: float
    metric: Metric = L2

    def __post_init__(self):
        if not self.radius >= 0.0:
            raise ValueError(f"radius must be non-negative, got {self.radius!r}")


# --------------------------------------------------------------------------
# kernels
# --------------------------------------------------------------------------


@njit(cache=True)
def dist_kernel(c, x, y, p):
    dx = abs(x - c)
    ay = abs(y)
    if p == 2.0:
        return math.hypot(dx, ay)
    if p == 1.0:
        return dx + ay
    if math.isinf(p):
        return max(dx, ay)
    m = max(dx, ay)
    if m == 0.0:
        return 0.0
    return m * ((dx / m) ** p + (ay / m) ** p) ** (1.0 / p)


@njit(cache=True)
def cost_kernel(r, alpha):
    if r == 0.0:
        return 0.0
    if alpha == 1.0:
        return r
    if alpha == 2.0:
        return r * r
    return r**alpha


@njit(cache=True)
def _powdiff(u, a, k, p):
    """``|a - u|^p - |u|^p + k`` and its derivative in ``u``, for ``a > 0``.

    For ``u < -a`` and ``u > a`` the power difference is formed as
    ``t^p * expm1(p * log1p(+-a / t))`` to avoid cancellation.
    """
    if u < -a:
        t = -u
        r = a / t
        tp = t**p
        g = tp * math.expm1(p * math.log1p(r)) + k
        dg = -p * (tp / t) * math.expm1((p - 1.0) * math.log1p(r))
        return g, dg
    if u > a:
        r = a / u
        tp = u**p
        g = tp * math.expm1(p * math.log1p(-r)) + k
        dg = p * (tp / u) * math.expm1((p - 1.0) * math.log1p(-r))
        return g, dg
    # direct form on [-a, a]; a / |u| could overflow here
    v = a - u
    pv = v**p
    pu = abs(u) ** p
    dv = 0.0 if v == 0.0 else p * pv / v
    du = 0.0 if u == 0.0 else p * pu / u
    return pv - pu + k, -dv - du


@njit(cache=True)
def crossing_kernel(xa, ya, xb, yb, p):
    """Axis crossing of the bisector of a (right) and b (left), ``xa > xb``.

    Left of the crossing ``a`` is the farther point.  Returns ``(c, kind)``
    where ``kind`` is one of the ``CROSS_*`` codes; ``c`` is only meaningful
    for ``CROSS_FINITE``.
    """
    if p == 2.0:
        c = 0.5 * (xa + xb) + (ya - yb) * (ya + yb) / (2.0 * (xa - xb))
        return c, 0
    if p == 1.0:
        w = xa - xb
        dy = ya - yb
        if w + dy <= 0.0:
            return 0.0, -1
        if dy - w >= 0.0:
            return 0.0, 1
        return 0.5 * (xa + xb + dy), 0
    return crossing_generic_kernel(xa, ya, xb, yb, p)


@njit(cache=True)
def crossing_generic_kernel(xa, ya, xb, yb, p):
    """Root-finding crossing for any ``1 < p < inf`` (no closed form)."""
    # Work with p-th powers in coordinates u = (c - xb) / s, where
    # g(u) = |A - u|^p - |u|^p + K is strictly decreasing and has the same sign
    # as d(c, a) - d(c, b).
    s = max(xa - xb, max(ya, yb))
    A = (xa - xb) / s
    K = (ya / s) ** p - (yb / s) ** p

    lo = -1.0
    glo, _ = _powdiff(lo, A, K, p)
    it = 0
    while glo <= 0.0:
        if it == _BRACKET_EXPANSIONS:
            return 0.0, -1
        lo *= 2.0
        glo, _ = _powdiff(lo, A, K, p)
        it += 1
    step = 1.0
    hi = A + step
    ghi, _ = _powdiff(hi, A, K, p)
    it = 0
    while ghi >= 0.0:
        if it == _BRACKET_EXPANSIONS:
            return 0.0, 1
        step *= 2.0
        hi = A + step
        ghi, _ = _powdiff(hi, A, K, p)
        it += 1

    u = 0.5 * (lo + hi)
    if K < 0.0:
        # far left the power difference behaves like p * A * |u|^(p - 1)
        guess = -((-K / (p * A)) ** (1.0 / (p - 1.0)))
        if lo < guess < hi:
            u = guess
    elif K > 0.0:
        guess = A + (K / (p * A)) ** (1.0 / (p - 1.0))
        if lo < guess < hi:
            u = guess
    # Newton steps, falling back to bisection whenever a step leaves the bracket
    for _ in range(_ROOT_MAX_ITER):
        g, dg = _powdiff(u, A, K, p)
        if g == 0.0:
            break
        if g > 0.0:
            lo = u
        else:
            hi = u
        nu = u - g / dg if dg < 0.0 else 0.5 * (lo + hi)
        if not (lo < nu < hi):
            nu = 0.5 * (lo + hi)
        tol = 1e-14 * max(1.0, abs(nu))
        if abs(nu - u) <= tol or hi - lo <= tol:
            u = nu
            break
        u = nu
    return xb + s * u, 0


@njit(cache=True)
def interval_disk_kernel(sx, sy, lo, lo_inf, hi, hi_inf, p):
    """Center and radius of the smallest disk centered in [lo, hi) for one site."""
    c = sx
    if not lo_inf and c < lo:
        c = lo
    if not hi_inf and c > hi:
        c = hi
    return c, dist_kernel(c, sx, sy, p)


@njit(cache=True)
def max_dist_kernel(c, xs, ys, p):
    m = 0.0
    for k in range(xs.shape[0]):
        d = dist_kernel(c, xs[k], ys[k], p)
        if d > m:
            m = d
    return m


@njit(cache=True)
def bruteforce_disk_kernel(xs, ys, p):
    """Ternary search for the center minimizing the farthest-point distance.

    Equal probes keep the left part of the bracket, so flat minima resolve to
    their leftmost center.
    """
    xmin = xs[0]
    xmax = xs[0]
    ymax = abs(ys[0])
    for k in range(1, xs.shape[0]):
        if xs[k] < xmin:
            xmin = xs[k]
        if xs[k] > xmax:
            xmax = xs[k]
        if abs(ys[k]) > ymax:
            ymax = abs(ys[k])
    span = xmax - xmin + ymax
    lo = xmin - span
    hi = xmax + span
    scale = max(1.0, max(abs(xmin), max(abs(xmax), ymax)))
    tol = 1e-12 * scale
    it = 0
    while hi - lo > tol and it < 400:
        third = (hi - lo) / 3.0
        m1 = lo + third
        m2 = hi - third
        if max_dist_kernel(m1, xs, ys, p) <= max_dist_kernel(m2, xs, ys, p):
            hi = m2
        else:
            lo = m1
        it += 1
    c = 0.5 * (lo + hi)
    return c, max_dist_kernel(c, xs, ys, p)


# --------------------------------------------------------------------------
# public operations
# --------------------------------------------------------------------------


def _metric(m) -> Metric:
    return m if isinstance(m, Metric) else Metric.parse(m)


def axis_distance(c: float, q, m=L2) -> float:
    """Distance from the axis point ``(c, 0)`` to ``q`` under ``m``."""
    return float(dist_kernel(float(c), float(q[0]), float(q[1]), _metric(m).p))


def cost(r: float, alpha: float) -> float:
    if r < 0:
        raise ValueError(f"radius must be non-negative, got {r!r}")
    return float(cost_kernel(float(r), check_alpha(alpha)))


def bisector_axis_crossing(q1, q2, m=L2) -> float:
    """The x where ``q1`` and ``q2`` are equidistant.

    Raises NonUniqueBisector when the two points share an x-coordinate, or
    when (L_1 only) one point dominates the other along the whole axis.
    """
    m = _metric(m)
    if m.is_inf:
        raise InvalidMetric("bisector crossings are only defined here for finite p")
    x1, y1 = float(q1[0]), abs(float(q1[1]))
    x2, y2 = float(q2[0]), abs(float(q2[1]))
    if x1 == x2:
        raise NonUniqueBisector(f"points share x = {x1!r}")
    if x1 > x2:
        c, kind = crossing_kernel(x1, y1, x2, y2, m.p)
    else:
        c, kind = crossing_kernel(x2, y2, x1, y1, m.p)
    if kind != CROSS_FINITE:
        raise NonUniqueBisector("one point is at least as far as the other from every axis point")
    return float(c)


def smallest_axis_disk_in_interval(
    site, lo: Optional[float], hi: Optional[float], m=L2
) -> AxisDisk:
    """Smallest disk around ``site`` whose center lies in ``[lo, hi)``.

    ``None`` stands for an unbounded end.  The center is ``site.x`` clamped
    into the interval.
    """
    m = _metric(m)
    if lo is not None and hi is not None and not lo < hi:
        raise ValueError(f"empty interval [{lo}, {hi})")
    c, r = interval_disk_kernel(
        float(site[0]),
        abs(float(site[1])),
        0.0 if lo is None else float(lo),
        lo is None,
        0.0 if hi is None else float(hi),
        hi is None,
        m.p,
    )
    return AxisDisk(float(c), float(r), m)


def as_arrays(points: Iterable) -> tuple[np.ndarray, np.ndarray]:
    pts = list(points)
    xs = np.array([float(q[0]) for q in pts], dtype=np.float64)
    ys = np.array([float(q[1]) for q in pts], dtype=np.float64)
    return xs, ys


def smallest_axis_disk_bruteforce(points: Sequence, m=L2) -> AxisDisk:
    """Reference smallest enclosing axis-centered disk via convex minimization."""
    m = _metric(m)
    if len(points) == 0:
        raise EmptyInput("no points")
    xs, ys = as_arrays(points)
    c, r = bruteforce_disk_kernel(xs, np.abs(ys), m.p)
    return AxisDisk(float(c), float(r), m)


def covers(d: AxisDisk, q, tol: float = 0.0) -> bool:
    return axis_distance(d.center_x, q, d.metric) <= d.radius + tol
