import pytest

ACCEPTANCE = []


@pytest.fixture
def record():
    """Record one acceptance line, then assert it."""

    def _record(number, ok, detail):
        ACCEPTANCE.append((number, bool(ok), detail))
        assert ok, f"criterion {number}: {detail}"

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail in sorted(ACCEPTANCE, key=lambda e: e[0]):
        terminalreporter.line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
