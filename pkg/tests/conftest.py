"""Shared pytest wiring: acceptance-criterion reporting.

Tests marked @pytest.mark.acceptance("<criterion>") get one summary line
each, "ACCEPTANCE: <criterion> PASS|FAIL", printed after the normal pytest
output so the criterion-level verdicts are visible at a glance.
"""

import pytest

_outcomes: list[tuple[str, bool]] = []


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "acceptance(label): top-level acceptance criterion"
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call":
        _outcomes.append((marker.args[0], report.outcome == "passed"))
    elif report.when == "setup" and report.outcome != "passed":
        # setup errors and skips never reach the call phase
        _outcomes.append((marker.args[0], False))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _outcomes:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for label, ok in _outcomes:
        terminalreporter.write_line(f"ACCEPTANCE: {label} {'PASS' if ok else 'FAIL'}")
