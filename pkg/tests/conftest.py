import random

import pytest

from infhex import (Tile, ball_window, comb_source, diagonal_source,
                    finite_source, full_source)


@pytest.fixture
def diag():
    return diagonal_source()


@pytest.fixture
def comb():
    return comb_source()


@pytest.fixture
def empty():
    return finite_source([])


@pytest.fixture
def full():
    return full_source()


def random_coloring(seed: int, radius: int = 8, density: float = 0.45):
    rng = random.Random(seed)
    return finite_source(t for t in ball_window(radius=radius).tiles()
                         if rng.random() < density)
