"""Acceptance criteria, one test each.

Every test records a ``[PASS]``/``[FAIL]`` line (also summarized at the end of
the pytest run) before asserting, so a failure still leaves its line behind.
"""

import json
import math
import time

import numpy as np
import pytest

from axicover import cli
from axicover import dp_solver as dp
from axicover.bench import doubling_ratios, run_bench
from axicover.formats import format_points_csv
from axicover.geometry import LINF, Metric, smallest_axis_disk_bruteforce
from axicover.interval_tree import FarthestIntervalStructure
from axicover.oracle import InstanceSpec, enumerate_partitions_optimal, random_instance, verify_covering

from conftest import ALPHAS, METRICS, instance, rel_close

DISTRIBUTIONS = ("uniform", "clustered", "collinear")


def _criterion1_instances():
    rng = np.random.default_rng(20240501)
    out = []
    for seed in range(500):
        n = int(rng.integers(1, 13))
        alpha = float(rng.choice(ALPHAS))
        p = float(rng.choice(METRICS))
        dist = DISTRIBUTIONS[seed % 3]
        out.append((instance(1000 + seed, n, dist), alpha, Metric(p)))
    return out


INSTANCES = _criterion1_instances()


def test_criterion_1_oracle_equivalence(record):
    t0 = time.perf_counter()
    worst = 0.0
    bad = []
    for idx, (pts, alpha, m) in enumerate(INSTANCES):
        got = dp.solve(pts, alpha, m).total_cost
        ref = enumerate_partitions_optimal(pts, alpha, m).total_cost
        err = abs(got - ref) / max(abs(ref), 1e-300)
        worst = max(worst, err)
        if not rel_close(got, ref, 1e-6):
            bad.append(idx)
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 60.0
    record("1 oracle equivalence", ok,
           f"{len(INSTANCES)} instances, {len(bad)} mismatches, max rel err {worst:.2e}, {elapsed:.1f} s")
    assert ok, bad[:10]


def test_criterion_2_covering_certificates(record):
    bad = []
    for idx, (pts, alpha, m) in enumerate(INSTANCES):
        c = dp.solve(pts, alpha, m)
        rep = verify_covering(pts, c, 1e-6, alpha)
        if not (rep.all_covered and rep.all_pinned):
            bad.append(idx)
    record("2 covering certificates", not bad, f"{len(INSTANCES)} instances, {len(bad)} failing at tol 1e-6")
    assert not bad, bad[:10]


def test_criterion_3_budget_consistency(record):
    rng = np.random.default_rng(7)
    bad = []
    for seed in range(100):
        n = int(rng.integers(1, 11))
        alpha = float(rng.choice(ALPHAS))
        m = Metric(float(rng.choice(METRICS)))
        pts = instance(3000 + seed, n, DISTRIBUTIONS[seed % 3])
        curve = [c.total_cost for c in dp.solve_all_budgets(pts, alpha, m)]
        unbounded = dp.solve(pts, alpha, m).total_cost
        monotone = all(a >= b for a, b in zip(curve, curve[1:]))
        if len(curve) != n or not monotone or not rel_close(curve[-1], unbounded, 1e-9):
            bad.append(seed)
    pair = [c.total_cost for c in dp.solve_all_budgets([(0, 1), (10, 1)], 2.0, Metric(2))]
    pair_ok = len(pair) == 2 and rel_close(pair[0], 26.0, 1e-9) and rel_close(pair[1], 2.0, 1e-9)
    ok = not bad and pair_ok
    record("3 budget consistency", ok, f"100 instances, {len(bad)} failing; two-point pair = {pair}")
    assert ok, bad


def _check_structure(s, sites):
    ivs = s.intervals_snapshot()
    if ivs[0].lo is not None or ivs[-1].hi is not None:
        return "ends not unbounded"
    for a, b in zip(ivs, ivs[1:]):
        if a.hi is None or b.lo is None or a.hi != b.lo:
            return "intervals do not abut"
        if not a.site.x > b.site.x:
            return "site-x not strictly decreasing"
    for iv in ivs:
        if iv.lo is not None and iv.hi is not None and not iv.lo < iv.hi:
            return "empty interval"
    ref = smallest_axis_disk_bruteforce(sites, s.metric).radius
    if abs(s.min_enclosing_radius() - ref) > 1e-8:
        return f"radius {s.min_enclosing_radius()!r} vs brute force {ref!r}"
    return None


def test_criterion_4_interval_structure(record):
    rng = np.random.default_rng(11)
    failures = []
    checks = 0
    for seq in range(200):
        p = float(rng.choice([1.0, 1.5, 2.0, 3.0]))
        length = int(rng.integers(1, 201))
        pts = random_instance(InstanceSpec(5000 + seq, length, distribution=DISTRIBUTIONS[seq % 3]))
        pts = dp.preprocess(pts)
        s = FarthestIntervalStructure(pts[0], Metric(p))
        for i in range(len(pts)):
            if i:
                s.insert_point(pts[i])
            msg = _check_structure(s, pts[: i + 1])
            checks += 1
            if msg:
                failures.append((seq, i, msg))
                break
        if s.deleted_count > s.inserted_count:
            failures.append((seq, -1, "more deletions than insertions"))
    ok = not failures
    record("4 interval-structure invariants", ok, f"200 sequences, {checks} post-insertion checks, {len(failures)} failures")
    assert ok, failures[:5]


def test_criterion_5_equivariance(record):
    rng = np.random.default_rng(13)
    failures = []
    for seed in range(100):
        n = int(rng.integers(1, 30))
        alpha = float(rng.choice(ALPHAS))
        m = Metric(float(rng.choice(METRICS)))
        t = float(rng.uniform(-1e3, 1e3))
        s = float(rng.choice([0.25, 3.0, 17.5]))
        pts = instance(7000 + seed, n, DISTRIBUTIONS[seed % 3])
        base = dp.solve(pts, alpha, m)

        moved = dp.solve([(q.x + t, q.y) for q in pts], alpha, m)
        if not rel_close(moved.total_cost, base.total_cost, 1e-9) or moved.k != base.k:
            failures.append((seed, "translation cost"))
        elif any(abs(a.center_x - (b.center_x + t)) > 1e-4 for a, b in zip(moved.disks, base.disks)):
            failures.append((seed, "translation centers"))

        scaled = dp.solve([(q.x * s, q.y * s) for q in pts], alpha, m)
        if not rel_close(scaled.total_cost, base.total_cost * s**alpha, 1e-8) or scaled.k != base.k:
            failures.append((seed, "scale cost"))
        elif any(not rel_close(a.radius, b.radius * s, 1e-8) for a, b in zip(scaled.disks, base.disks)):
            failures.append((seed, "scale radii"))

        flips = rng.integers(0, 2, size=n)
        mirrored = dp.solve([(q.x, -q.y if f else q.y) for q, f in zip(pts, flips)], alpha, m)
        if mirrored != base:
            failures.append((seed, "mirror"))
    ok = not failures
    record("5 equivariance", ok, f"100 instances x (translate, scale, mirror), {len(failures)} failures")
    assert ok, failures[:5]


SIZES = [512, 1024, 2048, 4096]


def test_criterion_6_scaling(record):
    lp = run_bench(SIZES, ("generic-lp",), repeat=5, seed=0, alpha=1.0, metric=Metric(2.0))
    linf = run_bench(SIZES, ("linf",), repeat=5, seed=0, alpha=1.0, metric=LINF)
    lp_ratios = [r for *_, r in doubling_ratios(lp)]
    linf_ratios = [r for *_, r in doubling_ratios(linf)]
    t4096 = next(r.median_wall_time_ms for r in lp if r.n == 4096) / 1e3
    ok = (
        len(lp_ratios) == 3 and len(linf_ratios) == 3
        and max(lp_ratios) <= 6.0 and max(linf_ratios) <= 5.0 and t4096 < 30.0
    )
    fmt = lambda rs: ", ".join(f"{r:.2f}" for r in rs)
    record("6 empirical scaling", ok,
           f"generic-lp (L2) ratios [{fmt(lp_ratios)}], n=4096 {t4096:.2f} s; linf ratios [{fmt(linf_ratios)}]")
    assert ok


def test_criterion_7_linf_cross_check(record):
    bad = []
    for idx, (pts, alpha, _) in enumerate(INSTANCES):
        got = dp.solve_linf(pts, alpha).total_cost
        ref = enumerate_partitions_optimal(pts, alpha, LINF).total_cost
        if not rel_close(got, ref, 1e-6):
            bad.append(idx)
    three = dp.solve_linf([(0, 1), (4, 2), (10, 1)], 1.0).total_cost
    ok = not bad and rel_close(three, 3.0, 1e-6)
    record("7 L_inf cross-check", ok, f"{len(INSTANCES)} instances, {len(bad)} mismatches; 3-point cost {three!r}")
    assert ok, bad[:10]


def test_criterion_8_cli_round_trip(record, tmp_path, capsys):
    rng = np.random.default_rng(17)
    failures = []
    tampered = 0
    for seed in range(50):
        n = int(rng.integers(1, 25))
        alpha = float(rng.choice(ALPHAS))
        p = rng.choice(["1", "1.5", "2", "3", "inf"])
        pts = random_instance(InstanceSpec(9000 + seed, n, distribution=DISTRIBUTIONS[seed % 3]))
        # feed raw points, some below the axis
        pts = [(q.x, -q.y if i % 2 else q.y) for i, q in enumerate(pts)]
        src = tmp_path / f"p{seed}.csv"
        res = tmp_path / f"r{seed}.json"
        src.write_text(format_points_csv(pts))
        args = ["solve", "--in", str(src), "--out", str(res), "--alpha", repr(alpha), "--metric", str(p)]
        if seed % 5 == 0:
            args += ["--k", str(1 + seed % 3)]
        if cli.main(args) != 0:
            failures.append((seed, "solve"))
            continue
        if cli.main(["verify", "--in", str(src), "--result", str(res)]) != 0:
            failures.append((seed, "verify"))
        doc = json.loads(res.read_text())
        for j in range(len(doc["disks"])):
            bad = json.loads(res.read_text())
            bad["disks"][j]["radius"] += 1e-3
            bad_path = tmp_path / f"t{seed}_{j}.json"
            bad_path.write_text(json.dumps(bad))
            tampered += 1
            if cli.main(["verify", "--in", str(src), "--result", str(bad_path)]) != 1:
                failures.append((seed, f"tampered disk {j} accepted"))
        capsys.readouterr()
    ok = not failures
    record("8 CLI round-trip", ok, f"50 instances verified, {tampered} tampered results rejected, {len(failures)} failures")
    assert ok, failures[:5]
