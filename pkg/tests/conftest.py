from __future__ import annotations

import random

import pytest

from edgeapex.graph import SmallGraph, from_edges

_CRITERIA: dict[str, str] = {}


def random_graph(rng: random.Random, n: int, p: float | None = None) -> SmallGraph:
    if p is None:
        p = rng.random()
    return from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@pytest.fixture
def rng():
    return random.Random(20261014)


def pytest_runtest_logreport(report):
    if "test_acceptance" not in report.nodeid or "criterion_" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::")[-1]
        _CRITERIA[name] = "PASS" if report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    def num(name):
        return int(name.split("_")[2])
    for name in sorted(_CRITERIA, key=num):
        terminalreporter.write_line(f"{_CRITERIA[name]}  {name}")
