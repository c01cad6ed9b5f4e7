import pytest

from mbehzad.network import SimConfig
from mbehzad.zoning import build_zoning

_acceptance_lines: list[str] = []


@pytest.fixture
def cfg():
    return SimConfig()


@pytest.fixture
def zoning():
    return build_zoning(100.0, 3)


@pytest.fixture
def report():
    """Record one pass/fail line per acceptance criterion, then assert it."""

    def _report(criterion: str, ok: bool, detail: str = "") -> None:
        _acceptance_lines.append(f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}")
        assert ok, f"{criterion}: {detail}"

    return _report


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
