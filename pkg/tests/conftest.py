import pytest

from polydeg.coeff import QQ
from polydeg.poly import Polynomial


@pytest.fixture
def P():
    def make(text, n=None, ring=QQ):
        return Polynomial.parse(text, n, ring)

    return make


def pytest_configure(config):
    config._acceptance = []


@pytest.fixture
def acceptance(request):
    """Record one PASS/FAIL line for the acceptance summary."""
    lines = request.config._acceptance

    def record(number, title, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'} [{number:2d}] {title}" + (f" ({detail})" if detail else "")
        lines.append((number, line))
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
