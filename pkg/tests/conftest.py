"""Shared fixtures and the acceptance summary printed after a run."""
import pytest

from theta_park.combinatorics import partitions

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def small_pairs():
    """(lambda, gamma) with |lambda| <= 3 and |gamma| <= 2."""
    return [(lam, g) for n in range(1, 4) for lam in partitions(n) for m in range(3) for g in partitions(m)]
