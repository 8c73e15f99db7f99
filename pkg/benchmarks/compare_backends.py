"""Time the numba kernels against the pure-Python fallback.

Each backend runs in its own interpreter because the switch is read at import
time.  Usage::

    python benchmarks/compare_backends.py --sizes 64,128,256 --metric 2
"""

import argparse
import json
import os
import subprocess
import sys

CHILD = r"""
import json, sys
from axicover._jit import BACKEND
from axicover.bench import run_bench
from axicover.geometry import Metric
sizes, paths, metric, repeat = json.loads(sys.argv[1])
recs = run_bench(sizes, paths, repeat=repeat, metric=Metric.parse(metric))
print(json.dumps({"backend": BACKEND, "rows": [[r.solver_path, r.n, r.median_wall_time_ms] for r in recs]}))
"""


def run_backend(disable: bool, sizes, paths, metric, repeat):
    env = dict(os.environ, AXICOVER_DISABLE_NUMBA="1" if disable else "0")
    out = subprocess.run(
        [sys.executable, "-c", CHILD, json.dumps([sizes, paths, metric, repeat])],
        env=env, capture_output=True, text=True, check=True,
    )
    return json.loads(out.stdout)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="64,128,256")
    ap.add_argument("--path", action="append", choices=("generic-lp", "linf", "budgeted"))
    ap.add_argument("--metric", default="2")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    sizes = [int(s) for s in args.sizes.split(",")]
    paths = args.path or ["generic-lp", "linf"]

    fast = run_backend(False, sizes, paths, args.metric, args.repeat)
    slow = run_backend(True, sizes, paths, args.metric, args.repeat)
    print(f"{'path':<11} {'n':>6} {fast['backend'] + ' ms':>12} {slow['backend'] + ' ms':>12} {'speedup':>8}")
    for (path, n, tf), (_, _, ts) in zip(fast["rows"], slow["rows"]):
        print(f"{path:<11} {n:>6} {tf:>12.3f} {ts:>12.3f} {ts / tf if tf else float('nan'):>8.1f}")


if __name__ == "__main__":
    main()
