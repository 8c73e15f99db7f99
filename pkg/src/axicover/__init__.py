"""Exact minimum-sum covering of planar points by disks centered on the x-axis."""

__version__ = "0.1.0"

from ._jit import BACKEND, NUMBA_ENABLED
from .dp_solver import (
    Covering,
    SolveRequest,
    preprocess,
    solve,
    solve_all_budgets,
    solve_linf,
    solve_unbounded,
    solve_with_budget,
)
from .geometry import AxisDisk, Metric, PointXY
from .interval_tree import FarthestInterval, FarthestIntervalStructure
from .oracle import InstanceSpec, enumerate_partitions_optimal, random_instance, verify_covering

__all__ = [
    "BACKEND",
    "NUMBA_ENABLED",
    "AxisDisk",
    "Covering",
    "FarthestInterval",
    "FarthestIntervalStructure",
    "InstanceSpec",
    "Metric",
    "PointXY",
    "SolveRequest",
    "enumerate_partitions_optimal",
    "preprocess",
    "random_instance",
    "solve",
    "solve_all_budgets",
    "solve_linf",
    "solve_unbounded",
    "solve_with_budget",
    "verify_covering",
]
