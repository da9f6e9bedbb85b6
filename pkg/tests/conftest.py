import pytest

CRITERIA_KEY = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[CRITERIA_KEY] = {}


@pytest.fixture
def record_criterion(request):
    """Store the one-line verdict of an acceptance criterion for the terminal summary."""
    def record(number, passed, details):
        request.config.stash[CRITERIA_KEY][number] = f"CRITERION {number}: {'PASS' if passed else 'FAIL'} {details}"
    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(CRITERIA_KEY, {})
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(lines):
        terminalreporter.write_line(lines[k])
