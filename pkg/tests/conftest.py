import random

import pytest
from hypothesis import strategies as st

from omimwidth.graph import Graph


def graph_from_letters(spec: str) -> Graph:
    """'ab bc cd' -> graph on the letters used, a=0, b=1, ..."""
    edges = [(ord(e[0]) - 97, ord(e[1]) - 97) for e in spec.split()]
    n = max((max(e) for e in edges), default=-1) + 1
    return Graph.from_edges(n, edges)


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


@st.composite
def graphs(draw, min_n=0, max_n=8, weighted=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    weights = draw(st.lists(st.integers(0, 20), min_size=n, max_size=n)) if weighted else None
    return Graph.from_edges(n, [e for e, c in zip(pairs, chosen) if c], weights)


@pytest.fixture
def rng():
    return random.Random(20240601)
