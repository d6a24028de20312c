"""Per-criterion PASS/FAIL lines for the acceptance suite.

Tests in test_acceptance.py carry ``@pytest.mark.criterion(n, label)``; after
the run, one line per criterion is printed (and echoed to stdout when the
terminal reporter is disabled).
"""

import pytest

_results: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, label): acceptance criterion covered by this test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, label = marker.args
    ok = _results.setdefault(number, [label, True])
    if report.failed or (report.when == "call" and report.skipped):
        ok[1] = False


def criterion_lines() -> list[str]:
    return [
        f"criterion {n} ({label}): {'PASS' if ok else 'FAIL'}"
        for n, (label, ok) in sorted(_results.items())
    ]


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for line in criterion_lines():
        terminalreporter.write_line(line)
