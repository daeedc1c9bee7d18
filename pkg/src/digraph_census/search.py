"""Exhaustive small-n verification and local search for extremal digraphs."""

from __future__ import annotations

import itertools
import json
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from multiprocessing import Pool
from pathlib import Path
from typing import Iterator

import numpy as np

from . import limits
from .bounds import BoundReport
from .census import bondy_bound, census, thomasse_bound
from .cig import CircularIntervalDigraph, extreme_state, INF
from .digraph import Digraph, count_induced_p3, count_walks, is_k_free
from .errors import PreconditionError

log = logging.getLogger(__name__)


# -- labelled digon-free enumeration ----------------------------------------

def vertex_pairs(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def _from_choices(n: int, pairs, choices) -> Digraph:
    edges = []
    for (i, j), c in zip(pairs, choices):
        if c == 1:
            edges.append((i, j))
        elif c == 2:
            edges.append((j, i))
    return Digraph(n, edges)


def enumerate_digon_free(n: int) -> Iterator[Digraph]:
    """Every labelled digon-free digraph on ``n`` vertices, once each.

    Each vertex pair ``i < j`` independently takes one of: no edge (0),
    ``i -> j`` (1), ``j -> i`` (2). Digraph number ``k`` reads its choices
    as the base-3 digits of ``k``, first pair most significant.
    """
    limits.check("enumerate_digon_free", n)
    pairs = vertex_pairs(n)
    for choices in itertools.product(range(3), repeat=len(pairs)):
        yield _from_choices(n, pairs, choices)


def digraph_from_index(n: int, k: int) -> Digraph:
    pairs = vertex_pairs(n)
    digits = []
    for _ in pairs:
        digits.append(k % 3)
        k //= 3
    return _from_choices(n, pairs, reversed(digits))


def _p3_table() -> np.ndarray:
    """Induced-path indicator for every choice triple on pairs (ab, ac, bc)."""
    table = np.zeros(27, dtype=np.int64)
    for ab, ac, bc in itertools.product(range(3), repeat=3):
        g = _from_choices(3, [(0, 1), (0, 2), (1, 2)], (ab, ac, bc))
        table[9 * ab + 3 * ac + bc] = count_induced_p3(g)
    return table


def _p3_kernel(n: int, lo: int, hi: int) -> np.ndarray:
    """Induced 2-edge path counts of digraphs ``lo..hi-1`` in enumeration order."""
    pairs = vertex_pairs(n)
    m = len(pairs)
    idx = np.arange(lo, hi, dtype=np.int64)
    digits = np.empty((m, hi - lo), dtype=np.int64)
    for p in range(m - 1, -1, -1):
        digits[p] = idx % 3
        idx //= 3
    pos = {pr: i for i, pr in enumerate(pairs)}
    table = _p3_table()
    total = np.zeros(hi - lo, dtype=np.int64)
    for a, b, c in itertools.combinations(range(n), 3):
        code = 9 * digits[pos[a, b]] + 3 * digits[pos[a, c]] + digits[pos[b, c]]
        total += table[code]
    return total


def _tie_key(g: Digraph):
    return g.edge_list()


def _partition_best(args) -> tuple[int, int, list]:
    """(max, count of digraphs, witness edge list) over one index range."""
    n, lo, hi = args
    values = _p3_kernel(n, lo, hi)
    best = int(values.max())
    hits = np.flatnonzero(values == best)
    witness = min((_tie_key(digraph_from_index(n, lo + int(h))) for h in hits))
    return best, hi - lo, witness


def _better(a, b) -> bool:
    """Does result ``a`` beat ``b`` (higher value, then smaller edge list)?"""
    return a[0] > b[0] or (a[0] == b[0] and a[2] < b[2])


@dataclass
class ThomasseResult:
    n: int
    max_p3: int
    witness: Digraph
    enumerated: int
    reports: list[BoundReport] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(r.holds for r in self.reports)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "enumerated": self.enumerated,
            "max": self.max_p3,
            "witness": {"n": self.witness.n, "edges": [list(e) for e in self.witness.edge_list()]},
            "bounds": [r.to_json() for r in self.reports],
            "verdict": "pass" if self.holds else "FAIL",
        }


def verify_thomasse(
    n: int,
    jobs: int = 1,
    split_pairs: int | None = None,
    resume: str | Path | None = None,
) -> ThomasseResult:
    """Exhaustive maximum of induced 2-edge paths over all digon-free digraphs.

    The enumeration is partitioned by fixing the first ``split_pairs`` pair
    choices. Partitions merge by maximum with the lexicographically smallest
    edge list as tie-break, so the result does not depend on ``jobs``. With
    ``resume`` the running best and last finished partition are checkpointed
    to that JSON file and picked up again on the next call.
    """
    limits.check("enumerate_digon_free", n)
    m = comb(n, 2)
    total = 3**m
    if split_pairs is None:
        split_pairs = min(m, max(0, m - 10))
    parts = 3**split_pairs
    size = 3 ** (m - split_pairs)
    tasks = [(n, p * size, (p + 1) * size) for p in range(parts)]

    best = None
    done = 0
    counted = 0
    resume = Path(resume) if resume else None
    if resume and resume.exists():
        state = json.loads(resume.read_text())
        if state.get("n") == n and state.get("split_pairs") == split_pairs:
            done = state["next_partition"]
            counted = state["enumerated"]
            if state["best"] is not None:
                b = state["best"]
                best = (b[0], 0, [tuple(e) for e in b[1]])
            log.info("resuming n=%d at partition %d/%d", n, done, parts)

    def checkpoint(next_partition):
        if resume:
            resume.write_text(json.dumps({
                "n": n,
                "split_pairs": split_pairs,
                "next_partition": next_partition,
                "enumerated": counted,
                "best": None if best is None else [best[0], [list(e) for e in best[2]]],
            }))

    pending = tasks[done:]
    if jobs > 1 and len(pending) > 1:
        with Pool(jobs) as pool:
            results = pool.imap(_partition_best, pending)
            for i, res in enumerate(results, start=done):
                counted += res[1]
                if best is None or _better(res, best):
                    best = res
                checkpoint(i + 1)
    else:
        for i, task in enumerate(pending, start=done):
            res = _partition_best(task)
            counted += res[1]
            if best is None or _better(res, best):
                best = res
            checkpoint(i + 1)

    assert counted == total, (counted, total)
    witness = Digraph(n, best[2])
    value = best[0]
    # the vectorised kernel must agree with the census on the witness
    assert census(witness).s4 == value
    reports = [
        BoundReport("thomasse", value, thomasse_bound(n)),
        BoundReport("bondy", value, bondy_bound(n)),
    ]
    return ThomasseResult(n, value, witness, counted, reports)


# -- circular interval digraphs ---------------------------------------------

def enumerate_cigs(n: int, two_free: bool = True) -> Iterator[CircularIntervalDigraph]:
    """All extent vectors describing a circular interval digraph on ``n``
    vertices (in lexicographic order), optionally only the digon-free ones."""
    if n == 0:
        yield CircularIntervalDigraph(())
        return
    a = [0] * n

    def digon_with_earlier(j: int) -> bool:
        for i in range(j):
            d = j - i
            if a[i] >= d and a[j] >= n - d:
                return True
        return False

    def rec(j: int):
        if j == n:
            if a[0] >= a[n - 1] - 1:
                yield CircularIntervalDigraph(a)
            return
        low = max(0, a[j - 1] - 1) if j else 0
        for x in range(low, n):
            a[j] = x
            if two_free and digon_with_earlier(j):
                continue
            yield from rec(j + 1)

    yield from rec(0)


def verify_cig(n: int) -> dict:
    """Check the ``n^3/16`` bound on every 2-free circular interval digraph
    and describe the optimal ones (maximum paths, then minimum ``xi``)."""
    limits.check("verify_cig", n)
    bound = Fraction(n**3, 16)
    count = 0
    violations = []
    best_p3 = -1
    maximisers: list[CircularIntervalDigraph] = []
    for g in enumerate_cigs(n):
        count += 1
        p3 = count_induced_p3(g.digraph)
        if p3 > bound:
            violations.append(list(g.extents))
        if p3 > best_p3:
            best_p3 = p3
            maximisers = [g]
        elif p3 == best_p3:
            maximisers.append(g)
    scored = [(extreme_state(g), g) for g in maximisers]
    min_xi = min(s.xi for s, _ in scored)
    optimal_states = [(s, g) for s, g in scored if s.xi == min_xi]
    dichotomy = all(
        s.alpha is not INF and s.alpha in (s.beta, s.beta + 1) for s, _ in optimal_states
    )
    report = BoundReport("cig_n3_over_16", best_p3, bound)
    return {
        "n": n,
        "enumerated": count,
        "max": best_p3,
        "violations": violations,
        "bound": report.to_json(),
        "optimal": [
            {"extents": list(g.extents), **s.to_json()} for s, g in optimal_states
        ],
        "alpha_beta_dichotomy": dichotomy,
        "verdict": "pass" if report.holds and not violations else "FAIL",
    }


# -- local search -------------------------------------------------------------

def _p3_delta(out, inn, u: int, v: int, adding: bool) -> int:
    """Induced 2-edge path change from inserting/deleting ``u -> v`` in a
    digon-free digraph, from bitsets of the graph *without* ``uv``."""
    mask = ~((1 << u) | (1 << v))
    adj_u = out[u] | inn[u]
    adj_v = out[v] | inn[v]
    with_edge = (inn[u] & ~adj_v & mask).bit_count() + (out[v] & ~adj_u & mask).bit_count()
    without = (out[u] & inn[v] & mask).bit_count() + (out[v] & inn[u] & mask).bit_count()
    return with_edge - without if adding else without - with_edge


def _p4_delta(g: Digraph, u: int, v: int, adding: bool) -> int:
    """Change in 3-edge walks (= 4-vertex paths when 3-free) from toggling ``uv``.

    A 3-edge walk through a new edge ``uv`` uses it exactly once in a
    3-free result: as first, middle or last edge.
    """
    out, inn = list(g.out_bits), list(g.in_bits)
    if not adding:
        out[u] &= ~(1 << v)
        inn[v] &= ~(1 << u)
    from_v = sum(out[a].bit_count() for a in _bits_iter(out[v]))
    into_u = sum(inn[a].bit_count() for a in _bits_iter(inn[u]))
    through = inn[u].bit_count() * out[v].bit_count()
    delta = from_v + through + into_u
    return delta if adding else -delta


def _bits_iter(b: int):
    while b:
        low = b & -b
        yield low.bit_length() - 1
        b ^= low


def _allowed_add(g: Digraph, u: int, v: int, free: int) -> bool:
    if g.has_edge(v, u):
        return False
    if free >= 3 and g.out_bits[v] & g.in_bits[u]:
        return False
    return True


def _objective(g: Digraph, objective: str) -> int:
    return count_induced_p3(g) if objective == "p3" else count_walks(g, 4)


@dataclass
class SearchResult:
    best: Digraph
    best_value: int
    trace: list[dict]
    objective: str
    free: int
    best_extents: tuple[int, ...] | None = None

    def bound_reports(self) -> list[BoundReport]:
        n = self.best.n
        if self.objective == "p3":
            return [
                BoundReport("bondy", self.best_value, bondy_bound(n)),
                BoundReport("thomasse", self.best_value, thomasse_bound(n)),
            ]
        return [BoundReport("P4_le_4_over_75_n4", self.best_value, Fraction(4, 75) * n**4)]

    def to_json(self) -> dict:
        out = {
            "objective": self.objective,
            "free": self.free,
            "n": self.best.n,
            "best_value": self.best_value,
            "best_edges": [list(e) for e in self.best.edge_list()],
            "trace": self.trace,
            "bounds": [r.to_json() for r in self.bound_reports()],
        }
        if self.best_extents is not None:
            out["best_extents"] = list(self.best_extents)
        return out


def local_search(
    seed: Digraph | CircularIntervalDigraph,
    objective: str = "p3",
    free: int = 2,
    budget: int = 100,
    rng_seed: int = 0,
) -> SearchResult:
    """Hill climbing over single-pair toggles that keep the freeness constraint.

    Each step takes the best strictly improving move (ties go to the
    smallest ``(u, v, mode)``); at a local optimum it takes a uniformly random
    allowed move instead. The best digraph seen is returned with the
    append-only trace of accepted moves. A circular interval seed switches
    to extent moves, with ``xi`` decrease accepted at equal objective.
    """
    if objective not in ("p3", "p4"):
        raise ValueError(f"objective must be 'p3' or 'p4', got {objective!r}")
    if free not in (2, 3):
        raise ValueError(f"free must be 2 or 3, got {free!r}")
    if objective == "p4" and free != 3:
        raise PreconditionError("the p4 objective is defined on 3-free digraphs")
    if isinstance(seed, CircularIntervalDigraph):
        if objective != "p3":
            raise PreconditionError("circular interval search optimises p3 only")
        return _cig_search(seed, free, budget, rng_seed)
    if not is_k_free(seed, free):
        raise PreconditionError(f"seed digraph is not {free}-free")

    rng = random.Random(rng_seed)
    g = seed
    value = _objective(g, objective)
    best, best_value = g, value
    trace: list[dict] = []
    for step in range(budget):
        moves = []
        for u in range(g.n):
            for v in range(g.n):
                if u == v:
                    continue
                if g.has_edge(u, v):
                    moves.append((u, v, "remove"))
                elif _allowed_add(g, u, v, free):
                    moves.append((u, v, "add"))
        if not moves:
            break

        def delta(mv):
            u, v, mode = mv
            if objective == "p3":
                out, inn = list(g.out_bits), list(g.in_bits)
                if mode == "remove":
                    out[u] &= ~(1 << v)
                    inn[v] &= ~(1 << u)
                return _p3_delta(out, inn, u, v, mode == "add")
            return _p4_delta(g, u, v, mode == "add")

        scored = [(delta(mv), mv) for mv in moves]
        top = max(d for d, _ in scored)
        if top > 0:
            move = min(mv for d, mv in scored if d == top)
            kind = "improve"
            change = top
        else:
            change, move = scored[rng.randrange(len(scored))]
            kind = "kick"
        u, v, mode = move
        g = g.toggle(u, v)
        value += change
        if not is_k_free(g, free):
            raise AssertionError(f"move {move} broke {free}-freeness")
        trace.append({"step": step, "u": u, "v": v, "mode": mode, "kind": kind, "value": value})
        if value > best_value:
            best, best_value = g, value
    return SearchResult(best, best_value, trace, objective, free)


def _cig_search(seed: CircularIntervalDigraph, free: int, budget: int, rng_seed: int) -> SearchResult:
    seed.require_two_free()
    rng = random.Random(rng_seed)
    g = seed
    value = count_induced_p3(g.digraph)
    xi = extreme_state(g).xi
    best, best_value, best_xi = g, value, xi
    trace: list[dict] = []
    n = g.n
    for step in range(budget):
        candidates = []
        for i in range(n):
            a = g.extents[i]
            for mode, new, v in (("add", a + 1, (i + a + 1) % n), ("remove", a - 1, (i + a) % n)):
                if not 0 <= new <= n - 1 or v == i:
                    continue
                try:
                    h = g.with_extents({i: new})
                except ValueError:
                    continue
                if not h.is_two_free:
                    continue
                candidates.append(((i, v, mode), h))
        if not candidates:
            break
        scored = []
        for move, h in candidates:
            hv = count_induced_p3(h.digraph)
            scored.append((hv, -extreme_state(h).xi, move, h))
        improving = [s for s in scored if (s[0], s[1]) > (value, -xi)]
        if improving:
            top = max((s[0], s[1]) for s in improving)
            hv, negxi, move, h = min((s for s in improving if (s[0], s[1]) == top), key=lambda s: s[2])
            kind = "improve"
        else:
            hv, negxi, move, h = scored[rng.randrange(len(scored))]
            kind = "kick"
        g, value, xi = h, hv, -negxi
        trace.append({
            "step": step, "u": move[0], "v": move[1], "mode": move[2],
            "kind": kind, "value": value, "xi": xi,
        })
        if (value, -xi) > (best_value, -best_xi):
            best, best_value, best_xi = g, value, xi
    return SearchResult(best.digraph, best_value, trace, "p3", free, best_extents=best.extents)
