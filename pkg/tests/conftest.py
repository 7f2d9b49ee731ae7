"""Collects acceptance outcomes and prints one PASS/FAIL line per criterion."""

import pytest

_RESULTS: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when != "call":
        return
    number, title = mark.args
    if report.passed and not hasattr(report, "wasxfail"):
        status = "PASS"
    elif hasattr(report, "wasxfail"):
        status = "FAIL (expected: " + report.wasxfail + ")"
    else:
        status = "FAIL"
    _RESULTS[number] = {"title": title, "status": status, "seconds": report.duration}


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        r = _RESULTS[number]
        terminalreporter.write_line(f"{r['status'][:4]}  criterion {number:2d}  {r['title']}  ({r['seconds']:.2f}s)")
        if len(r["status"]) > 4:
            terminalreporter.write_line(f"      {r['status'][5:]}")
