"""Shared fixtures and the acceptance-criterion summary.

Tests marked ``@pytest.mark.criterion("...")`` get one PASS/FAIL line each in
the terminal summary, whatever else the run prints.
"""

import pytest

_RESULTS: list[tuple[str, str, float]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion reported as PASS/FAIL")


def pytest_runtest_makereport(item, call):
    if call.when != "call":
        return
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    outcome = "PASS" if call.excinfo is None else "FAIL"
    _RESULTS.append((marker.args[0], outcome, call.duration))


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, seconds in sorted(_RESULTS):
        terminalreporter.write_line(f"{outcome} {name} ({seconds:.1f}s)")


@pytest.fixture
def cache_dir(tmp_path):
    return tmp_path / "cache"
