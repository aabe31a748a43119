import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from bdcut.multigraph import MultiGraph


def path(n):
    return MultiGraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return MultiGraph(n, [(i, (i + 1) % n) for i in range(n)])


def random_graph(rng, n, m):
    return MultiGraph(n, [tuple(rng.sample(range(n), 2)) for _ in range(m)])


@pytest.fixture
def rng():
    return random.Random(20261016)
