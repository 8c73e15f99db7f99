"""The pure-Python fallback and the numba kernels must agree."""

import json
import os
import subprocess
import sys

import pytest

from axicover import _jit
from axicover.dp_solver import SolveRequest, solve, solve_all_budgets
from axicover.geometry import Metric
from axicover.interval_tree import FarthestIntervalStructure

from conftest import instance

CASES = [(seed, 1 + seed % 9, [1.0, 1.5, 2.0, 3.0, "inf"][seed % 5], [1.0, 2.0, 1.5][seed % 3]) for seed in range(25)]

SCRIPT = r"""
import json, sys
from axicover import _jit
from axicover.dp_solver import SolveRequest, solve, solve_all_budgets
from axicover.geometry import Metric
from axicover.interval_tree import FarthestIntervalStructure
from axicover.oracle import InstanceSpec, random_instance
from axicover.dp_solver import preprocess

cases = json.loads(sys.argv[1])
out = {"backend": _jit.BACKEND, "results": []}
for seed, n, p, alpha in cases:
    pts = preprocess(random_instance(InstanceSpec(seed, n)))
    req = SolveRequest(pts, alpha, Metric.parse(str(p)))
    c = solve(req)
    curve = [b.total_cost for b in solve_all_budgets(req)]
    radii = []
    if p != "inf":
        s = FarthestIntervalStructure(pts[0], Metric.parse(str(p)))
        radii.append(s.min_enclosing_radius())
        for q in pts[1:]:
            s.insert_point(q)
            radii.append(s.min_enclosing_radius())
    out["results"].append({
        "cost": c.total_cost,
        "disks": [[d.center_x, d.radius] for d in c.disks],
        "curve": curve,
        "radii": radii,
    })
print(json.dumps(out))
"""


@pytest.fixture(scope="module")
def python_results():
    env = dict(os.environ, AXICOVER_DISABLE_NUMBA="1")
    res = subprocess.run(
        [sys.executable, "-c", SCRIPT, json.dumps(CASES)], env=env, capture_output=True, text=True, check=True
    )
    return json.loads(res.stdout)


def test_fallback_backend_is_selected(python_results):
    assert python_results["backend"] == "python"


@pytest.mark.skipif(not _jit.NUMBA_ENABLED, reason="numba backend not active")
def test_backends_agree(python_results):
    for (seed, n, p, alpha), ref in zip(CASES, python_results["results"]):
        pts = instance(seed, n)
        m = Metric.parse(str(p))
        req = SolveRequest(pts, alpha, m)
        c = solve(req)
        assert c.total_cost == pytest.approx(ref["cost"], rel=1e-12)
        flat = [v for d in c.disks for v in (d.center_x, d.radius)]
        assert flat == pytest.approx([v for d in ref["disks"] for v in d], rel=1e-9, abs=1e-9)
        assert [b.total_cost for b in solve_all_budgets(req)] == pytest.approx(ref["curve"], rel=1e-12)
        if not m.is_inf:
            s = FarthestIntervalStructure(pts[0], m)
            radii = [s.min_enclosing_radius()]
            for q in pts[1:]:
                s.insert_point(q)
                radii.append(s.min_enclosing_radius())
            assert radii == pytest.approx(ref["radii"], rel=1e-12)
