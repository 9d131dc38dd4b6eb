from __future__ import annotations

import random

import pytest

from wvcolor.graphs import WeightedGraph, build


def random_graph(rng: random.Random, n: int, p: float, max_weight: int = 1) -> WeightedGraph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    weights = [rng.randint(1, max_weight) for _ in range(n)] if max_weight > 1 else None
    return build(n, edges, weights)


def seeded_graphs(seed: int, count: int, max_n: int, max_weight: int = 1,
                  min_n: int = 1, densities=(0.2, 0.35, 0.5, 0.65, 0.8)):
    """Deterministic stream of random graphs shared by differential tests."""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(min_n, max_n)
        p = rng.choice(densities)
        yield random_graph(rng, n, p, max_weight)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
