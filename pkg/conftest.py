import random
from fractions import Fraction

import pytest

from minfill.models.metric_space import MetricSpace
from minfill.services.tree_service import named_tree


def pytest_addoption(parser):
    parser.addoption('--runslow', action='store_true', default=False,
                     help='run the 7-point polytopes and bound audits')


def pytest_collection_modifyitems(config, items):
    if config.getoption('--runslow'):
        return
    skip_slow = pytest.mark.skip(reason='needs --runslow')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


def line_space(n):
    return MetricSpace(n, tuple(tuple(Fraction(abs(i - j)) for j in range(n)) for i in range(n)))


@pytest.fixture
def line4():
    return line_space(4)


@pytest.fixture
def square4():
    """d12 = d34 = 2, all other distances 1."""
    return MetricSpace.from_pair_vector(4, (2, 1, 1, 1, 1, 2))


@pytest.fixture
def caterpillar4():
    return named_tree('caterpillar', 4)


@pytest.fixture
def caterpillar5():
    return named_tree('caterpillar', 5)


@pytest.fixture
def caterpillar6():
    return named_tree('caterpillar', 6)


@pytest.fixture
def snowflake6():
    return named_tree('snowflake', 6)


@pytest.fixture
def rng():
    return random.Random(20240501)


@pytest.fixture
def line_metric():
    return line_space
