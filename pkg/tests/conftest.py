import pytest

_ACCEPTANCE_LINES = []


@pytest.fixture
def record_criterion():
    """Collect one summary line per acceptance criterion."""
    def record(number, title, value, tolerance, passed):
        status = "PASS" if passed else "FAIL"
        _ACCEPTANCE_LINES.append(
            (number, f"criterion {number} {status}: {title} (worst {value:.3e}, tol {tolerance:.0e})"))
        return passed
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(_ACCEPTANCE_LINES):
        terminalreporter.write_line(line)
