import pytest
from hypothesis import HealthCheck, settings

from maxclass import fixtures

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture
def table():
    return fixtures.FIXTURES["table-euclidean"].cls


@pytest.fixture
def v():
    """Named vertices v0..v10 of the 11-row table."""
    return {f"v{i}": int(s, 2) for i, s in enumerate(fixtures.TABLE_EUCLIDEAN)}


# one line per acceptance criterion, filled in by tests/test_acceptance.py
CRITERIA: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for k in sorted(CRITERIA):
            terminalreporter.write_line(CRITERIA[k])
