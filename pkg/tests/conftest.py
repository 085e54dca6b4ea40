import random
from itertools import combinations
from typing import Callable

import pytest

from wsat.graph import Graph, complement, from_edges, path_graph
from wsat.pattern import PatternSpec


def _random_graph(rng: random.Random, n: int, density: float) -> Graph:
    pairs = combinations(range(n), 2)
    return from_edges(n, [e for e in pairs if rng.random() < density])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20231018)


@pytest.fixture
def random_graph(rng: random.Random) -> Callable[..., Graph]:
    """Factory for G(n, p) samples drawn from the shared seeded rng."""

    def make(n: int, density: float = 0.5) -> Graph:
        return _random_graph(rng, n, density)

    return make


@pytest.fixture
def k23() -> PatternSpec:
    return PatternSpec(2, 3)


@pytest.fixture
def complement_p5() -> Graph:
    return complement(path_graph(5))


@pytest.fixture
def results_log(tmp_path) -> str:
    return str(tmp_path / "wsat-results.log")
