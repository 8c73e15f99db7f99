"""Farthest-point Voronoi intervals on the x-axis, maintained under insertion.

Sites arrive in increasing x.  Each new site takes over the leftmost part of
the axis, so the interval sequence only ever changes at its left end: it is
stored as a stack whose bottom (slot 0) is the rightmost interval
``[lo, +inf)`` and whose top is the leftmost interval ``(-inf, hi)``.

Per slot ``k`` we keep

* ``bnd[k]``  the left endpoint (unused for the top slot, which is unbounded),
* ``sx, sy``  the interval's site,
* ``cc, cr``  center and radius of the smallest disk centered in the interval,
* ``amin[k]`` the slot in ``0..k`` with the smallest radius, ties toward the
  higher slot (the leftmost interval).

The right endpoint of slot ``k`` is ``bnd[k - 1]``; slot 0 is unbounded on the
right.  ``amin[top]`` is therefore the smallest enclosing disk of all sites.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from ._jit import njit
from .errors import EmptyStructure, InvalidMetric, NonMonotoneInsertion
from .geometry import (
    AxisDisk,
    Metric,
    PointXY,
    crossing_kernel,
    interval_disk_kernel,
)


@njit(cache=True)
def _refresh(k, top_lo_inf, bnd, sx, sy, cc, cr, amin, p):
    lo_inf = top_lo_inf
    hi_inf = k == 0
    hi = 0.0 if hi_inf else bnd[k - 1]
    c, r = interval_disk_kernel(sx[k], sy[k], bnd[k], lo_inf, hi, hi_inf, p)
    cc[k] = c
    cr[k] = r
    if k == 0 or r <= cr[amin[k - 1]]:
        amin[k] = k
    else:
        amin[k] = amin[k - 1]


@njit(cache=True)
def init_kernel(bnd, sx, sy, cc, cr, amin, x, y):
    sx[0] = x
    sy[0] = y
    bnd[0] = 0.0
    cc[0] = x
    cr[0] = y
    amin[0] = 0
    return 0


@njit(cache=True)
def insert_kernel(bnd, sx, sy, cc, cr, amin, top, x, y, p, counters):
    """Insert site (x, y) right of every stored site; returns the new top.

    ``counters[0]`` accumulates deleted intervals.  Arrays need room for
    ``top + 2`` slots.
    """
    popped = False
    k = top
    while k >= 0:
        b, kind = crossing_kernel(x, y, sx[k], sy[k], p)
        if kind == -1:
            if not popped:
                # never strictly farther than the current leftmost site
                return top
            b = bnd[k]
        elif kind == 1 or (k > 0 and b >= bnd[k - 1]):
            counters[0] += 1
            popped = True
            k -= 1
            continue
        if popped and b < bnd[k]:
            b = bnd[k]
        bnd[k] = b
        _refresh(k, False, bnd, sx, sy, cc, cr, amin, p)
        t = k + 1
        sx[t] = x
        sy[t] = y
        bnd[t] = 0.0
        _refresh(t, True, bnd, sx, sy, cc, cr, amin, p)
        return t
    return init_kernel(bnd, sx, sy, cc, cr, amin, x, y)


@dataclass(frozen=True)
class FarthestInterval:
    """``[lo, hi)`` with ``None`` marking an unbounded end."""

    lo: Optional[float]
    hi: Optional[float]
    site: PointXY
    candidate: AxisDisk

    @property
    def candidate_radius(self) -> float:
        return self.candidate.radius


class FarthestIntervalStructure:
    """Axis intervals of the farthest-point Voronoi diagram of the inserted sites."""

    def __init__(self, p, m=Metric(2.0), capacity: int = 16):
        m = m if isinstance(m, Metric) else Metric.parse(m)
        if m.is_inf:
            raise InvalidMetric("the interval structure serves finite p only")
        self.metric = m
        cap = max(2, int(capacity))
        self._bnd = np.zeros(cap)
        self._sx = np.zeros(cap)
        self._sy = np.zeros(cap)
        self._cc = np.zeros(cap)
        self._cr = np.zeros(cap)
        self._amin = np.zeros(cap, dtype=np.int64)
        self._counters = np.zeros(1, dtype=np.int64)
        x, y = float(p[0]), abs(float(p[1]))
        self._top = init_kernel(self._bnd, self._sx, self._sy, self._cc, self._cr, self._amin, x, y)
        self._max_x = x
        self.inserted_count = 1

    @property
    def deleted_count(self) -> int:
        """Intervals removed over the structure's lifetime."""
        return int(self._counters[0])

    def __len__(self):
        return self._top + 1

    def _grow(self):
        cap = 2 * self._sx.shape[0]
        for name in ("_bnd", "_sx", "_sy", "_cc", "_cr", "_amin"):
            old = getattr(self, name)
            new = np.zeros(cap, dtype=old.dtype)
            new[: old.shape[0]] = old
            setattr(self, name, new)

    def insert_point(self, p) -> "FarthestIntervalStructure":
        x, y = float(p[0]), abs(float(p[1]))
        if not x > self._max_x:
            raise NonMonotoneInsertion(
                f"x = {x!r} is not right of every stored site (max x = {self._max_x!r})"
            )
        if self._top + 2 > self._sx.shape[0]:
            self._grow()
        self._top = insert_kernel(
            self._bnd, self._sx, self._sy, self._cc, self._cr, self._amin,
            self._top, x, y, self.metric.p, self._counters,
        )
        self._max_x = x
        self.inserted_count += 1
        return self

    def _check_nonempty(self):
        if self.inserted_count < 1 or self._top < 0:
            raise EmptyStructure("no sites inserted")

    def min_enclosing_radius(self) -> float:
        self._check_nonempty()
        return float(self._cr[self._amin[self._top]])

    def min_enclosing_disk(self) -> AxisDisk:
        self._check_nonempty()
        k = self._amin[self._top]
        return AxisDisk(float(self._cc[k]), float(self._cr[k]), self.metric)

    def intervals_snapshot(self) -> List[FarthestInterval]:
        out = []
        for k in range(self._top, -1, -1):
            lo = None if k == self._top else float(self._bnd[k])
            hi = None if k == 0 else float(self._bnd[k - 1])
            out.append(
                FarthestInterval(
                    lo,
                    hi,
                    PointXY(float(self._sx[k]), float(self._sy[k])),
                    AxisDisk(float(self._cc[k]), float(self._cr[k]), self.metric),
                )
            )
        return out


def init(p, m=Metric(2.0)) -> FarthestIntervalStructure:
    return FarthestIntervalStructure(p, m)


def insert_point(s: FarthestIntervalStructure, p_new) -> FarthestIntervalStructure:
    return s.insert_point(p_new)


def min_enclosing_radius(s: FarthestIntervalStructure) -> float:
    return s.min_enclosing_radius()


def min_enclosing_disk(s: FarthestIntervalStructure) -> AxisDisk:
    return s.min_enclosing_disk()


def intervals_snapshot(s: FarthestIntervalStructure) -> List[FarthestInterval]:
    return s.intervals_snapshot()


__all__ = [
    "FarthestInterval",
    "FarthestIntervalStructure",
    "init",
    "insert_point",
    "min_enclosing_radius",
    "min_enclosing_disk",
    "intervals_snapshot",
]
