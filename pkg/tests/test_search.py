import itertools
import json
import random

import pytest

from digraph_census import (
    CircularIntervalDigraph,
    Digraph,
    PreconditionError,
    census,
    count_induced_p3,
    count_paths,
    enumerate_digon_free,
    is_k_free,
    layered_tournaments,
    local_search,
    verify_cig,
    verify_thomasse,
)
from digraph_census import search
from digraph_census.cig import extreme_state
from digraph_census.digraph import empty_digraph
from digraph_census.search import _p3_kernel, digraph_from_index, enumerate_cigs


# -- enumeration -------------------------------------------------------------------

@pytest.mark.parametrize("n, total", [(0, 1), (1, 1), (2, 3), (3, 27), (4, 729)])
def test_enumeration_counts(n, total):
    graphs = list(enumerate_digon_free(n))
    assert len(graphs) == total
    assert len(set(graphs)) == total
    assert all(not g.digons() for g in graphs)


def test_enumeration_order_matches_index():
    for k, g in enumerate(enumerate_digon_free(3)):
        assert digraph_from_index(3, k) == g


def test_kernel_matches_census_on_all_n4():
    values = _p3_kernel(4, 0, 729)
    for k, g in enumerate(enumerate_digon_free(4)):
        assert values[k] == census(g).s4


def test_kernel_matches_census_on_n5_sample():
    rng = random.Random(3)
    values = _p3_kernel(5, 0, 3**10)
    for k in rng.sample(range(3**10), 500):
        assert values[k] == count_induced_p3(digraph_from_index(5, k))


# -- exhaustive maxima -------------------------------------------------------------------

@pytest.mark.parametrize("n, best", [(1, 0), (2, 0), (3, 1), (4, 4), (5, 7)])
def test_verify_thomasse_small(n, best):
    r = verify_thomasse(n)
    assert r.max_p3 == best
    assert r.enumerated == 3 ** (n * (n - 1) // 2)
    assert count_induced_p3(r.witness) == best
    assert r.holds
    assert r.to_json()["verdict"] == "pass"


def test_verify_thomasse_independent_of_partitioning():
    a = verify_thomasse(5, split_pairs=0).to_json()
    b = verify_thomasse(5, split_pairs=4).to_json()
    c = verify_thomasse(5, jobs=2, split_pairs=3).to_json()
    assert a == b == c


def test_witness_is_smallest_maximiser():
    r = verify_thomasse(4)
    maximisers = [g.edge_list() for g in enumerate_digon_free(4) if census(g).s4 == 4]
    assert r.witness.edge_list() == min(maximisers)


def test_resume_after_interruption(tmp_path, monkeypatch):
    ckpt = tmp_path / "ckpt.json"
    real = search._partition_best
    calls = []

    def flaky(args):
        calls.append(args)
        if len(calls) == 5:
            raise KeyboardInterrupt
        return real(args)

    monkeypatch.setattr(search, "_partition_best", flaky)
    with pytest.raises(KeyboardInterrupt):
        verify_thomasse(4, split_pairs=2, resume=ckpt)
    state = json.loads(ckpt.read_text())
    assert state["next_partition"] == 4
    assert state["enumerated"] == 4 * 81

    monkeypatch.setattr(search, "_partition_best", real)
    resumed = verify_thomasse(4, split_pairs=2, resume=ckpt)
    assert resumed.to_json() == verify_thomasse(4).to_json()
    assert json.loads(ckpt.read_text())["next_partition"] == 9


def test_checkpoint_for_other_n_is_ignored(tmp_path):
    ckpt = tmp_path / "ckpt.json"
    verify_thomasse(3, split_pairs=1, resume=ckpt)
    assert verify_thomasse(4, split_pairs=1, resume=ckpt).max_p3 == 4


# -- circular interval digraphs -----------------------------------------------------------

def is_cig_brute(g: Digraph) -> bool:
    """Every edge u -> v has u -> w and w -> v for all w strictly inside its clockwise span."""
    n = g.n
    for u, v in g.edges:
        d = (v - u) % n
        for k in range(1, d):
            w = (u + k) % n
            if not (g.has_edge(u, w) and g.has_edge(w, v)):
                return False
    return True


@pytest.mark.parametrize("n", [3, 4, 5])
def test_enumerate_cigs_matches_filter(n):
    expected = {g for g in enumerate_digon_free(n) if is_cig_brute(g)}
    got = [c.digraph for c in enumerate_cigs(n)]
    assert len(got) == len(set(got))
    assert set(got) == expected


def test_enumerate_cigs_with_digons():
    n = 4
    all_digraphs = (
        Digraph(n, [p for p, keep in zip(itertools.permutations(range(n), 2), bits) if keep])
        for bits in itertools.product((0, 1), repeat=n * (n - 1))
    )
    expected = {g for g in all_digraphs if is_cig_brute(g)}
    assert {c.digraph for c in enumerate_cigs(n, two_free=False)} == expected


@pytest.mark.parametrize(
    "n, count, best",
    [(1, 1, 0), (2, 3, 0), (3, 11, 1), (4, 44, 4), (5, 183, 7), (6, 774, 12), (7, 3294, 21), (8, 14034, 32)],
)
def test_verify_cig(n, count, best):
    r = verify_cig(n)
    assert r["enumerated"] == count
    assert r["max"] == best
    assert r["violations"] == []
    assert r["verdict"] == "pass"
    if n >= 4:
        assert r["alpha_beta_dichotomy"]


def test_verify_cig_is_tight_at_four():
    assert verify_cig(4)["bound"]["slack"] == {"num": 0, "den": 1}


# -- local search ------------------------------------------------------------------

def test_search_from_empty_finds_four_cycle_value():
    r = local_search(empty_digraph(4), objective="p3", free=2, budget=30, rng_seed=1)
    assert r.best_value == 4
    assert count_induced_p3(r.best) == 4
    assert not r.best.digons()


def test_search_values_track_recounts():
    r = local_search(empty_digraph(6), objective="p3", free=2, budget=40, rng_seed=7)
    g = empty_digraph(6)
    for entry in r.trace:
        g = g.toggle(entry["u"], entry["v"])
        assert count_induced_p3(g) == entry["value"]
    assert all(b.holds for b in r.bound_reports())


def test_search_p4_tracks_path_counts():
    r = local_search(empty_digraph(7), objective="p4", free=3, budget=60, rng_seed=2)
    g = empty_digraph(7)
    for entry in r.trace:
        g = g.toggle(entry["u"], entry["v"])
        assert is_k_free(g, 3)
        assert count_paths(g, 4) == entry["value"]


def test_search_p4_never_beats_bound():
    for seed in range(3):
        r = local_search(layered_tournaments(8), objective="p4", free=3, budget=30, rng_seed=seed)
        assert r.best_value >= 116
        assert all(b.holds for b in r.bound_reports())


def test_search_is_deterministic():
    a = local_search(empty_digraph(6), objective="p3", free=3, budget=25, rng_seed=11).to_json()
    b = local_search(empty_digraph(6), objective="p3", free=3, budget=25, rng_seed=11).to_json()
    assert json.dumps(a) == json.dumps(b)


def test_search_rejects_bad_arguments():
    with pytest.raises(PreconditionError):
        local_search(empty_digraph(4), objective="p4", free=2)
    with pytest.raises(PreconditionError):
        local_search(Digraph(3, [(0, 1), (1, 2), (2, 0)]), objective="p3", free=3)
    with pytest.raises(ValueError):
        local_search(empty_digraph(4), objective="p5")


def test_cig_search():
    r = local_search(CircularIntervalDigraph([0] * 12), objective="p3", free=2, budget=60, rng_seed=0)
    assert r.best_value <= 12**3 // 16
    best = CircularIntervalDigraph(r.best_extents)
    assert best.is_two_free
    assert count_induced_p3(best.digraph) == r.best_value
    assert all("xi" in e for e in r.trace)
    assert r.trace[-1]["xi"] == extreme_state(CircularIntervalDigraph(_replay_extents(r.trace, 12))).xi


def _replay_extents(trace, n):
    a = [0] * n
    for e in trace:
        a[e["u"]] += 1 if e["mode"] == "add" else -1
    return a
