import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_results: dict[int, list[tuple[str, bool]]] = {}
_titles: dict[int, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by this test")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    number = getattr(report, "criterion", None)
    if number is None:
        return
    _results.setdefault(number, []).append((report.nodeid, report.passed))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        report.criterion = marker.args[0]
        _titles[marker.args[0]] = marker.args[1]


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        ok = all(passed for _, passed in _results[number])
        terminalreporter.write_line(f"criterion {number:2d} {'PASS' if ok else 'FAIL'}: {_titles[number]}")
