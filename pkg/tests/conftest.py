from fractions import Fraction as F
from pathlib import Path

import pytest

from bipolar_fre import BipolarSystem

PROBLEMS = Path(__file__).resolve().parent.parent / "problems"

_criteria = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        _criteria.append((marker.args[0], marker.args[1], report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed in sorted(_criteria):
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] AC{number:<2} {title}")


@pytest.fixture
def problems_dir():
    return PROBLEMS


@pytest.fixture
def single_eq():
    """(0.8 x1) v (0.1 (1-x1)) v (0.5 x2) v (0.4 (1-x2)) = 0.4"""
    return BipolarSystem.single(["0.8", "0.5"], ["0.1", "0.4"], "0.4")


@pytest.fixture
def single_eq_variant():
    return BipolarSystem.single(["0.8", "0.5"], ["0.1", "0.3"], "0.4")


@pytest.fixture
def conflict_sys():
    return BipolarSystem.build([["0.5"], ["0.1"]], [["0.2"], ["0.8"]], ["0.5", "0.4"])


@pytest.fixture
def three_sys():
    return BipolarSystem.build(
        [["0.1", "0.25", "0.4"], ["0.1", "0.3", "0.3"], ["0.3", "0.4", "0.8"]],
        [["0.3", "0.3", "0.4"], ["0.8", "0.6", "0.5"], ["0.8", "0.5", "0.8"]],
        ["0.2", "0.4", "0.4"],
    )


def fr(*values):
    """Tuple of exact fractions from strings/ints: fr("1/2", 1) -> (1/2, 1)."""
    return tuple(F(v) for v in values)
