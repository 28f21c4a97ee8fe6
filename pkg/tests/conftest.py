import random

import pytest

from acr_workbench.graphs.core import FeaturedGraph
from acr_workbench.graphs.generators import make_directed_cycle, make_loop_and_two_cycle, make_strict_linear_order


@pytest.fixture
def order5() -> FeaturedGraph:
    return make_strict_linear_order(5)


@pytest.fixture
def cycle3() -> FeaturedGraph:
    return make_directed_cycle(3)


@pytest.fixture
def g3() -> FeaturedGraph:
    return make_loop_and_two_cycle()


@pytest.fixture
def rng() -> random.Random:
    return random.Random(7)
