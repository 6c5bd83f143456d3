import time

import pytest

_LINES = []


class Criterion:
    """Times one acceptance criterion and records a pass/fail line for the summary."""

    def __init__(self, number, title, budget):
        self.number, self.title, self.budget = number, title, budget
        self.start = time.perf_counter()

    def elapsed(self):
        return time.perf_counter() - self.start


@pytest.fixture
def criterion(request):
    marker = request.node.get_closest_marker("criterion")
    number, title, budget = marker.args
    c = Criterion(number, title, budget)
    yield c
    report = getattr(request.node, "rep_call", None)
    passed = report is not None and report.passed
    t = c.elapsed()
    status = "PASS" if passed else "FAIL"
    _LINES.append((number, f"criterion {number:>2} {status}  {t:7.2f}s / {budget:>3}s  {title}"))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title, budget): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _LINES:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(_LINES):
        terminalreporter.write_line(line)
