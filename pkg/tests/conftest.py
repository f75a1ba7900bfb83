import re

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")
_results = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    key = (int(m.group(1)), m.group(2))
    if report.when == "call":
        _results[key] = "PASS" if report.passed else "FAIL"
    elif report.failed:
        _results[key] = "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for (number, name), outcome in sorted(_results.items()):
        terminalreporter.write_line(f"criterion {number:2d} {name.replace('_', ' '):<40} {outcome}")
