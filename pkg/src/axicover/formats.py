"""Point files and the result JSON document."""

from __future__ import annotations

import io
import json
import math
import sys
from dataclasses import dataclass
from typing import IO, List, Optional, Union

from .dp_solver import Covering
from .errors import NonFiniteCoordinate, ParseError
from .geometry import AxisDisk, Metric, PointXY

Source = Union[bytes, str, IO]


def _read_text(source: Source) -> str:
    if isinstance(source, bytes):
        return source.decode("utf-8")
    if isinstance(source, str):
        return source
    data = source.read()
    return data.decode("utf-8") if isinstance(data, bytes) else data


def _coord(text, line=None, field=None) -> float:
    try:
        v = float(text)
    except (TypeError, ValueError):
        raise ParseError(f"not a number: {text!r}", line, field) from None
    if not math.isfinite(v):
        raise NonFiniteCoordinate(f"non-finite coordinate {text!r}", line, field)
    return v


def _parse_csv(text: str) -> List[PointXY]:
    points = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = [f.strip() for f in line.split(",")]
        if len(fields) != 2:
            raise ParseError(f"expected 'x,y', got {len(fields)} field(s)", lineno)
        points.append(PointXY(_coord(fields[0], lineno, 1), _coord(fields[1], lineno, 2)))
    return points


def _parse_json(text: str) -> List[PointXY]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno) from None
    if not isinstance(doc, dict) or not isinstance(doc.get("points"), list):
        raise ParseError('expected an object with a "points" array')
    points = []
    for i, item in enumerate(doc["points"]):
        where = f"points[{i}]"
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise ParseError("expected [x, y]", field=where)
        if any(isinstance(v, bool) or not isinstance(v, (int, float)) for v in item):
            raise ParseError("coordinates must be numbers", field=where)
        points.append(PointXY(_coord(item[0], field=where), _coord(item[1], field=where)))
    return points


def parse_points(source: Source, format: str = "auto") -> List[PointXY]:
    """Read raw points in input order; no normalization."""
    text = _read_text(source)
    if format == "auto":
        format = "json" if text.lstrip().startswith("{") else "csv"
    if format == "csv":
        return _parse_csv(text)
    if format == "json":
        return _parse_json(text)
    raise ValueError(f"unknown point format {format!r}")


def format_points_csv(points) -> str:
    return "".join(f"{float(q[0])!r},{float(q[1])!r}\n" for q in points)


@dataclass
class ResultDocument:
    input_summary: dict
    disks: List[dict]
    total_cost: float
    k: int
    solver_path: str
    wall_time_ms: float
    all_budgets: Optional[List[dict]] = None

    @classmethod
    def from_covering(cls, c: Covering, n, alpha, metric: Metric, budget, solver_path, wall_time_ms, all_budgets=None):
        return cls(
            input_summary={"n": int(n), "alpha": float(alpha), "metric": metric.to_json(), "budget": budget},
            disks=[{"center_x": d.center_x, "radius": d.radius} for d in c.disks],
            total_cost=float(c.total_cost),
            k=c.k,
            solver_path=solver_path,
            wall_time_ms=float(wall_time_ms),
            all_budgets=all_budgets,
        )

    @property
    def metric(self) -> Metric:
        return Metric.parse(str(self.input_summary["metric"]))

    @property
    def alpha(self) -> float:
        return float(self.input_summary["alpha"])

    def covering(self) -> Covering:
        m = self.metric
        return Covering(
            tuple(AxisDisk(float(d["center_x"]), float(d["radius"]), m) for d in self.disks),
            float(self.total_cost),
        )

    def to_dict(self) -> dict:
        out = {
            "input_summary": {
                key: self.input_summary.get(key) for key in ("n", "alpha", "metric", "budget")
            },
            "disks": [{"center_x": d["center_x"], "radius": d["radius"]} for d in self.disks],
            "total_cost": self.total_cost,
            "k": self.k,
            "solver_path": self.solver_path,
            "wall_time_ms": self.wall_time_ms,
        }
        if self.all_budgets is not None:
            out["all_budgets"] = self.all_budgets
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_json(cls, source: Source) -> "ResultDocument":
        text = _read_text(source)
        try:
            d = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(e.msg, e.lineno, e.colno) from None
        try:
            summary = d["input_summary"]
            disks = [{"center_x": float(x["center_x"]), "radius": float(x["radius"])} for x in d["disks"]]
            doc = cls(
                input_summary=dict(summary),
                disks=disks,
                total_cost=float(d["total_cost"]),
                k=int(d["k"]),
                solver_path=str(d["solver_path"]),
                wall_time_ms=float(d["wall_time_ms"]),
                all_budgets=d.get("all_budgets"),
            )
            Metric.parse(str(summary["metric"]))
            float(summary["alpha"])
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"malformed result document: {e}") from None
        return doc


def read_text_file(path: Optional[str], stdin=None) -> str:
    if path is None or path == "-":
        stream = stdin if stdin is not None else sys.stdin
        return _read_text(stream)
    with io.open(path, "r", encoding="utf-8") as fh:
        return fh.read()
