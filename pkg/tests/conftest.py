from functools import lru_cache

import pytest

from periodic_hall import HallAlgebra, Quiver, RootCategory


@lru_cache(maxsize=None)
def hall_for(type_name, q):
    return HallAlgebra(RootCategory(Quiver.from_type(type_name), q))


@pytest.fixture
def hall():
    return hall_for


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
