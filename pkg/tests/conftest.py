import json
from pathlib import Path

import pytest

from tsf import KeyMatrix, SplitMix64, random_key

FIXTURES = Path(__file__).parent / "fixtures"

CASE1 = ((2, 5, -6), (3, 1, 3), (4, -2, -3))
CASE2 = ((3, 5, -6), (4, 1, 3), (5, -2, -3))
CASE3 = ((1, 5, -6), (2, 1, 3), (2, -2, -3))
CASE4 = ((1, 5, -6, 1), (2, 1, 3, 2), (3, -2, -3, 3), (4, 2, 4, 4))

CASE1_R = (2, 0, 0, 18, 0, 3, 18, 18, 6, 20, 2, 6, 20, 13, 6, 20, 24, 6, 20, 8, 8, 23, 26, 8, 26, 26, 24)


@pytest.fixture(scope="session")
def worked():
    return json.loads((FIXTURES / "case1_worked_example.json").read_text())


@pytest.fixture
def case1_key():
    return KeyMatrix.from_rows(CASE1)


def seeded_keys(count, digits, seed=2024):
    gen = SplitMix64(seed)
    return [random_key(gen.next(), digits) for _ in range(count)]


_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    marker = _markers.get(report.nodeid)
    if marker is not None:
        _criteria[marker] = report.outcome


_markers = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _markers[item.nodeid] = m.args


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), outcome in sorted(_criteria.items()):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  criterion {number:>2}: {title}")
