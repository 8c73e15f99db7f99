import math

import pytest

from axicover import dp_solver as dp
from axicover.oracle import InstanceSpec, random_instance

ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k.split()[0])):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {detail}")


@pytest.fixture
def record():
    def _record(key, ok, detail=""):
        ACCEPTANCE[key] = (bool(ok), detail)
        print(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {detail}")

    return _record


def rel_close(a, b, rtol):
    return abs(a - b) <= rtol * max(abs(a), abs(b), 1e-300)


def instance(seed, n, distribution="uniform"):
    return dp.preprocess(random_instance(InstanceSpec(seed, n, distribution=distribution)))


METRICS = [1.0, 1.5, 2.0, 3.0, math.inf]
ALPHAS = [1.0, 1.5, 2.0, 3.0]
