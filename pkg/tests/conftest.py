import itertools
import random

import pytest
from hypothesis import strategies as st

from digraph_census import Digraph, is_k_free


def random_digon_free(rng: random.Random, n: int, p: float | None = None) -> Digraph:
    if p is None:
        p = rng.random()
    edges = []
    for u, v in itertools.combinations(range(n), 2):
        r = rng.random()
        if r < p / 2:
            edges.append((u, v))
        elif r < p:
            edges.append((v, u))
    return Digraph(n, edges)


def random_three_free(rng: random.Random, n: int, p: float | None = None) -> Digraph:
    """Greedy random 3-free digraph: candidate edges in random order, each
    kept with probability ``p`` if it closes no cycle of length <= 3."""
    if p is None:
        p = rng.uniform(0.2, 1.0)
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    rng.shuffle(pairs)
    out = [0] * n
    inn = [0] * n
    edges = []
    for u, v in pairs:
        if rng.random() >= p:
            continue
        if out[v] >> u & 1 or out[v] & inn[u]:
            continue
        out[u] |= 1 << v
        inn[v] |= 1 << u
        edges.append((u, v))
    return Digraph(n, edges)


@st.composite
def digon_free_digraphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    choices = draw(st.lists(st.integers(0, 2), min_size=len(pairs), max_size=len(pairs)))
    edges = []
    for (u, v), c in zip(pairs, choices):
        if c == 1:
            edges.append((u, v))
        elif c == 2:
            edges.append((v, u))
    return Digraph(n, edges)


@st.composite
def digraphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Digraph(n, [e for e, k in zip(pairs, keep) if k])


@st.composite
def three_free_digraphs(draw, max_n=10):
    n = draw(st.integers(0, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    g = random_three_free(random.Random(seed), n)
    assert is_k_free(g, 3)
    return g


@pytest.fixture
def rng():
    return random.Random(20070107)


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance")
        for k in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[k])
