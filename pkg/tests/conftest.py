from functools import lru_cache

import pytest

from restricted_range.algebra import SetModel, VecModel
from restricted_range.instances import CORPUS, NON_REGULAR, REGULAR_CONTROLS, corpus_instance
from restricted_range.semigroup import enumerate_semigroup

ACCEPTANCE_LINES = []


@lru_cache(maxsize=None)
def table_for(name):
    return enumerate_semigroup(corpus_instance(name))


@lru_cache(maxsize=None)
def table_of(instance):
    return enumerate_semigroup(instance)


@pytest.fixture(scope="session")
def s32():
    """SetModel(3, B={0,1}), the running small example."""
    return table_of(SetModel(3, (0, 1)))


@pytest.fixture(scope="session")
def v221():
    return table_of(VecModel(2, 2, ((1, 0),)))


@pytest.fixture(params=NON_REGULAR)
def nonregular(request):
    return table_for(request.param)


@pytest.fixture(params=CORPUS)
def any_table(request):
    return table_for(request.param)


@pytest.fixture(params=REGULAR_CONTROLS)
def regular_control(request):
    return table_for(request.param)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
