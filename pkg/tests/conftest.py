import itertools

import pytest

from pcgraph import build
from pcgraph.families import example_directed, example_k5_double_pentagon


@pytest.fixture(scope="session")
def double_pentagon():
    return example_k5_double_pentagon()


@pytest.fixture(scope="session")
def directed_example():
    return example_directed(6)


@pytest.fixture(scope="session")
def rainbow_k4():
    return build(4, [(u, v, i) for i, (u, v) in enumerate(itertools.combinations(range(4), 2))])


@pytest.fixture(scope="session")
def mono_k3():
    return build(3, [(0, 1, 7), (0, 2, 7), (1, 2, 7)])
