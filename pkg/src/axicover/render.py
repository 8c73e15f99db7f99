"""SVG drawing of a covering: axis, input points, one path per disk."""

from __future__ import annotations

import math
from typing import Sequence

from .dp_solver import Covering
from .geometry import Metric

POLY_SEGMENTS = 256


def _num(v: float) -> str:
    s = format(float(v), ".10g")
    return "0" if s == "-0" else s


def ball_path(cx: float, r: float, m: Metric) -> str:
    """Boundary of the L_p ball of radius ``r`` around ``(cx, 0)``, y pointing up."""
    if m.p == 2.0:
        return (
            f"M {_num(cx - r)},0 A {_num(r)},{_num(r)} 0 1,0 {_num(cx + r)},0 "
            f"A {_num(r)},{_num(r)} 0 1,0 {_num(cx - r)},0 Z"
        )
    if m.p == 1.0:
        verts = [(cx - r, 0.0), (cx, r), (cx + r, 0.0), (cx, -r)]
    elif m.is_inf:
        verts = [(cx - r, -r), (cx - r, r), (cx + r, r), (cx + r, -r)]
    else:
        verts = []
        for k in range(POLY_SEGMENTS):
            t = 2.0 * math.pi * k / POLY_SEGMENTS
            u, v = math.cos(t), math.sin(t)
            norm = (abs(u) ** m.p + abs(v) ** m.p) ** (1.0 / m.p)
            verts.append((cx + r * u / norm, r * v / norm))
    body = " L ".join(f"{_num(x)},{_num(-y)}" for x, y in verts)
    return f"M {body} Z"


def render_svg(points: Sequence, covering: Covering, metric: Metric) -> str:
    xs = [float(q[0]) for q in points]
    ys = [float(q[1]) for q in points]
    for d in covering.disks:
        xs += [d.center_x - d.radius, d.center_x + d.radius]
        ys += [-d.radius, d.radius]
    if xs:
        x0, x1, y0, y1 = min(xs), max(xs), min(ys + [0.0]), max(ys + [0.0])
    else:
        x0, x1, y0, y1 = -1.0, 1.0, -1.0, 1.0
    w = max(x1 - x0, 1e-9)
    h = max(y1 - y0, 1e-9)
    mx, my = 0.05 * w, 0.05 * h
    vx, vy = x0 - mx, -(y1 + my)
    vw, vh = w + 2 * mx, h + 2 * my
    stroke = 0.004 * max(vw, vh)
    marker = 2.0 * stroke

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_num(vw)}" height="{_num(vh)}" '
        f'viewBox="{_num(vx)} {_num(vy)} {_num(vw)} {_num(vh)}">',
        f'<line id="axis" x1="{_num(vx)}" y1="0" x2="{_num(vx + vw)}" y2="0" '
        f'stroke="#888888" stroke-width="{_num(stroke)}"/>',
    ]
    for i, d in enumerate(covering.disks):
        out.append(
            f'<path class="disk" data-index="{i}" d="{ball_path(d.center_x, d.radius, metric)}" '
            f'fill="#4a90d9" fill-opacity="0.15" stroke="#1f5fa8" stroke-width="{_num(stroke)}"/>'
        )
    for x, y in zip(xs[: len(points)], ys[: len(points)]):
        out.append(f'<circle class="point" cx="{_num(x)}" cy="{_num(-y)}" r="{_num(marker)}" fill="#cc2222"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
