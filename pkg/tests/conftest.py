"""Shared fixtures and the acceptance pass/fail summary hook."""

import pytest

from shifted_crystal import SkewShape, build_graph

_acceptance_results = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    if "test_acceptance.py" in report.nodeid and "criterion" in report.nodeid:
        _acceptance_results[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for nodeid in sorted(_acceptance_results, key=_criterion_key):
        outcome = _acceptance_results[nodeid]
        name = nodeid.split("::")[-1]
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}")


def _criterion_key(nodeid):
    name = nodeid.split("::")[-1]
    digits = "".join(ch for ch in name if ch.isdigit())
    return (int(digits) if digits else 0, name)


@pytest.fixture(scope="session")
def graph_cache():
    cache = {}

    def get(shape_text, n):
        key = (shape_text, n)
        if key not in cache:
            cache[key] = build_graph(SkewShape.parse(shape_text), n)
        return cache[key]

    return get
