import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def record_criterion():
    """Record one pass/fail summary line per acceptance criterion."""

    def record(label, passed, detail=""):
        line = f"[{'PASS' if passed else 'FAIL'}] {label}" + (f" -- {detail}" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
