import pytest

from whiskertype.core import context_from


@pytest.fixture
def square():
    """(x^2, y^2)"""
    return context_from([(2, 0), (0, 2)])


@pytest.fixture
def cubic():
    """(x^3, y^3, xy)"""
    return context_from([(3, 0), (0, 3), (1, 1)])


@pytest.fixture
def maximal():
    """(x, y)"""
    return context_from([(1, 0), (0, 1)])


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
