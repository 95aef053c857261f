import pytest

_acceptance_lines: list[str] = []


@pytest.fixture
def acceptance_log():
    """Tests append 'criterion N: PASS/FAIL ...' lines for the final summary."""
    return _acceptance_lines.append


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(_acceptance_lines):
        terminalreporter.write_line(line)
