from __future__ import annotations

from itertools import combinations
from pathlib import Path

import pytest

from groundedl import (Graph, LinearOrder, OrderedGraph, complete_multipartite,
                       cycle_graph)

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def c4() -> Graph:
    return cycle_graph(4)


@pytest.fixture
def c4_good(c4) -> OrderedGraph:
    # a < b < d < c with a, b, c, d = 1, 2, 3, 4
    return OrderedGraph(c4, LinearOrder((1, 2, 4, 3)))


@pytest.fixture
def c4_natural(c4) -> OrderedGraph:
    return OrderedGraph(c4, LinearOrder((1, 2, 3, 4)))


@pytest.fixture
def gadget_i() -> OrderedGraph:
    g = Graph(4, frozenset({(1, 2), (2, 3), (1, 4)}))
    return OrderedGraph(g, LinearOrder((1, 2, 3, 4)))


@pytest.fixture
def k222() -> Graph:
    return complete_multipartite(2, 2, 2)


def all_graphs(n: int):
    """Every labeled graph on vertices 1..n."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for b, p in enumerate(pairs) if mask >> b & 1))


def natural(g: Graph) -> OrderedGraph:
    return OrderedGraph(g, LinearOrder(tuple(range(1, g.n + 1))))
