"""Print one verdict line per acceptance criterion at the end of the run."""

from __future__ import annotations

import re

_RESULTS: dict[int, list[tuple[str, bool]]] = {}
_PATTERN = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_\w+$")


def pytest_runtest_logreport(report):
    m = _PATTERN.search(report.nodeid)
    if not m:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        name = report.nodeid.rsplit("::", 1)[1]
        _RESULTS.setdefault(int(m.group(1)), []).append((name, report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    from test_acceptance import CRITERIA

    terminalreporter.section("acceptance criteria")
    for num in sorted(CRITERIA):
        runs = _RESULTS.get(num)
        if runs is None:
            terminalreporter.write_line(f"criterion {num:2d} {CRITERIA[num]}: NOT RUN")
            continue
        failed = [name for name, ok in runs if not ok]
        verdict = "PASS" if not failed else "FAIL (" + ", ".join(failed) + ")"
        terminalreporter.write_line(f"criterion {num:2d} {CRITERIA[num]}: {verdict}")
