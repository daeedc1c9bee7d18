import pytest

from digraph_census import (
    PreconditionError,
    SizeLimitError,
    census,
    count_induced_p3,
    is_k_free,
    layered_tournaments,
    min_out_degree,
    recursive_family,
    thomasse_bound,
)
from digraph_census.families import layer_of


@pytest.mark.parametrize("i, expected", [(0, 0), (1, 4), (2, 272), (3, 17472)])
def test_recursive_family_is_tight(i, expected):
    g = recursive_family(i)
    n = 4**i
    assert g.n == n
    assert count_induced_p3(g) == expected == thomasse_bound(n)


def test_recursive_family_structure():
    g = recursive_family(2)
    assert not g.digons()
    # every vertex has the next block of 4 as out-neighbours, plus inner edges
    assert all(g.out_degree(v) == 4 + 1 for v in range(16))
    assert census(g).s4 == 272


def test_recursive_family_level_one_is_c4():
    assert recursive_family(1).edge_list() == [(0, 1), (1, 2), (2, 3), (3, 0)]


def test_recursive_family_rejects_negative_level():
    with pytest.raises(PreconditionError):
        recursive_family(-1)


def test_size_limit_env(monkeypatch):
    monkeypatch.setenv("DIGRAPH_CENSUS_MAX_N", "10")
    with pytest.raises(SizeLimitError):
        recursive_family(2)
    with pytest.raises(SizeLimitError):
        layered_tournaments(12)
    assert layered_tournaments(8).n == 8


@pytest.mark.parametrize("n", [4, 8, 12, 16, 20])
def test_layered_family(n):
    g = layered_tournaments(n)
    k = n // 4
    assert is_k_free(g, 3)
    assert not is_k_free(g, 4)
    assert min_out_degree(g) == k
    assert g.m == 4 * k * (k - 1) // 2 + 4 * k * k
    for u, v in g.edges:
        lu, lv = layer_of(n, u), layer_of(n, v)
        assert lv in (lu, (lu + 1) % 4)


def test_layered_rejects_bad_order():
    with pytest.raises(PreconditionError):
        layered_tournaments(6)
