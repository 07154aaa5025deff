import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def record_criterion():
    """Collect a one-line verdict per acceptance criterion for the terminal summary."""

    def record(number, title, passed, detail):
        verdict = "PASS" if passed else "FAIL"
        ACCEPTANCE_LINES.append((number, f"[{verdict}] criterion {number}: {title} ({detail})"))
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)
