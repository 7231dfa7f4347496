import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record a one-line pass/fail verdict for an acceptance criterion."""
    label = request.node.get_closest_marker("criterion").args[0]
    yield
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion label")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
