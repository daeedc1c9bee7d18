"""Triad census of digon-free digraphs and the induced 2-edge path bounds.

The seven isomorphism types of 3-vertex digon-free digraphs are numbered

    s1 empty            s2 one edge          s3 in-star (two edges, common head)
    s4 directed path    s5 out-star          s6 transitive triangle
    s7 cyclic triangle

Only the two triangle counts are enumerated. The others follow from the
degree identities

    s3 + s6          = sum C(d-_i, 2)
    s4 + s6 + 3 s7   = sum d-_i d+_i
    s5 + s6          = sum C(d+_i, 2)
    s2 + 2(s3+s4+s5) + 3(s6+s7) = (n - 2) |E|
    s1 + ... + s7    = C(n, 3)
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass
from fractions import Fraction
from math import comb

from .bounds import BoundReport
from .digraph import Digraph


@dataclass(frozen=True)
class TriadCensus:
    s1: int
    s2: int
    s3: int
    s4: int
    s5: int
    s6: int
    s7: int

    def as_tuple(self) -> tuple[int, ...]:
        return astuple(self)

    def total(self) -> int:
        return sum(astuple(self))

    def to_json(self) -> dict:
        return {f"s{i}": v for i, v in enumerate(astuple(self), start=1)}


def _triangles(g: Digraph, edges) -> tuple[int, int]:
    """Partial (cyclic, transitive) triangle counts over a slice of edges.

    Each cyclic triangle is hit once per edge (three times in total); each
    transitive triangle only at its source-to-middle edge.
    """
    out, inn = g.out_bits, g.in_bits
    cyc = trans = 0
    for u, v in edges:
        cyc += (out[v] & inn[u]).bit_count()
        trans += (out[u] & out[v]).bit_count()
    return cyc, trans


def _triangles_chunk(args):
    g, edges = args
    return _triangles(g, edges)


def triangle_counts(g: Digraph, jobs: int = 1) -> tuple[int, int]:
    """Return ``(cyclic, transitive)`` triangle counts."""
    edges = g.edge_list()
    if jobs <= 1 or len(edges) < 4096:
        cyc, trans = _triangles(g, edges)
    else:
        size = -(-len(edges) // jobs)
        chunks = [(g, edges[i:i + size]) for i in range(0, len(edges), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_triangles_chunk, chunks))
        cyc = sum(p[0] for p in parts)
        trans = sum(p[1] for p in parts)
    return cyc // 3, trans


def _count_single_edge_triads(g: Digraph) -> int:
    out, inn = g.out_bits, g.in_bits
    full = (1 << g.n) - 1
    total = 0
    for u, v in g.edges:
        near = out[u] | inn[u] | out[v] | inn[v] | (1 << u) | (1 << v)
        total += (full & ~near).bit_count()
    return total


def census(g: Digraph, *, jobs: int = 1, recount_s2: bool = False) -> TriadCensus:
    """Seven-type triad census from degree sums plus triangle counts.

    With ``recount_s2`` the one-edge count is enumerated instead of being
    solved from the edge-count identity, so that identity's residual becomes
    a genuine check.
    """
    g.require_digon_free()
    n = g.n
    s7, s6 = triangle_counts(g, jobs)
    sum_in2 = sum_out2 = sum_inout = 0
    for v in range(n):
        di, do = g.in_degree(v), g.out_degree(v)
        sum_in2 += comb(di, 2)
        sum_out2 += comb(do, 2)
        sum_inout += di * do
    s3 = sum_in2 - s6
    s5 = sum_out2 - s6
    s4 = sum_inout - s6 - 3 * s7
    if recount_s2:
        s2 = _count_single_edge_triads(g)
    else:
        s2 = (n - 2) * g.m - 2 * (s3 + s4 + s5) - 3 * (s6 + s7) if n >= 2 else 0
    s1 = comb(n, 3) - s2 - s3 - s4 - s5 - s6 - s7
    return TriadCensus(s1, s2, s3, s4, s5, s6, s7)


def _classify(g: Digraph, a: int, b: int, c: int) -> int:
    tri = (a, b, c)
    indeg = {x: 0 for x in tri}
    outdeg = {x: 0 for x in tri}
    m = 0
    for x, y in itertools.permutations(tri, 2):
        if g.has_edge(x, y):
            m += 1
            outdeg[x] += 1
            indeg[y] += 1
    if m == 0:
        return 1
    if m == 1:
        return 2
    if m == 2:
        if max(indeg.values()) == 2:
            return 3
        if max(outdeg.values()) == 2:
            return 5
        return 4
    if max(outdeg.values()) == 2:
        return 6
    return 7


def census_bruteforce(g: Digraph) -> TriadCensus:
    """Classify every vertex triple directly."""
    g.require_digon_free()
    counts = [0] * 8
    for a, b, c in itertools.combinations(range(g.n), 3):
        counts[_classify(g, a, b, c)] += 1
    return TriadCensus(*counts[1:])


def census_residuals(c: TriadCensus, g: Digraph) -> list[int]:
    """LHS minus RHS of the five census identities (all zero when correct).

    The edge-count identity is stated in doubled form so that every residual
    is an integer.
    """
    n = g.n
    din = [g.in_degree(v) for v in range(n)]
    dout = [g.out_degree(v) for v in range(n)]
    s1, s2, s3, s4, s5, s6, s7 = c.as_tuple()
    return [
        s1 + s2 + s3 + s4 + s5 + s6 + s7 - comb(n, 3),
        2 * (s2 + 2 * s3 + 2 * s4 + 2 * s5 + 3 * s6 + 3 * s7)
        - (n - 2) * sum(i + o for i, o in zip(din, dout)),
        s3 + s6 - sum(comb(i, 2) for i in din),
        s4 + s6 + 3 * s7 - sum(i * o for i, o in zip(din, dout)),
        s5 + s6 - sum(comb(o, 2) for o in dout),
    ]


def bondy_bound(n: int) -> Fraction:
    return Fraction(2 * n**3, 25)


def thomasse_bound(n: int) -> Fraction:
    return Fraction((n - 1) * n * (n + 1), 15)


def bondy_weighted_sum(c: TriadCensus) -> Fraction:
    """The nonnegative combination of triad counts that dominates ``s4``."""
    return (
        Fraction(2, 5) * c.s2 + Fraction(1, 10) * c.s3 + c.s4
        + Fraction(1, 10) * c.s5 + Fraction(9, 5) * c.s7
    )


def bondy_refined_bound(g: Digraph) -> Fraction:
    """``2n^3/25`` minus the degree-deficit squares.

    Equals :func:`bondy_weighted_sum` plus ``sum(d-_i + d+_i) / 20``, so it
    is an upper bound on ``s4`` for every digon-free digraph.
    """
    g.require_digon_free()
    n = g.n
    target = Fraction(2 * n, 5)
    imbalance = deficit_in = deficit_out = Fraction(0)
    for v in range(n):
        di, do = g.in_degree(v), g.out_degree(v)
        imbalance += (di - do) ** 2
        deficit_in += (target - di) ** 2
        deficit_out += (target - do) ** 2
    return bondy_bound(n) - imbalance / 10 - deficit_in / 4 - deficit_out / 4


def census_bounds(g: Digraph, c: TriadCensus | None = None) -> list[BoundReport]:
    if c is None:
        c = census(g)
    n = g.n
    return [
        BoundReport("bondy", c.s4, bondy_bound(n)),
        BoundReport("bondy_refined", c.s4, bondy_refined_bound(g)),
        BoundReport("thomasse", c.s4, thomasse_bound(n)),
    ]


def census_report(g: Digraph, *, jobs: int = 1) -> dict:
    c = census(g, jobs=jobs)
    return {
        "n": g.n,
        **c.to_json(),
        "residuals": census_residuals(c, g),
        "bounds": [b.to_json() for b in census_bounds(g, c)],
    }


__all__ = [
    "TriadCensus",
    "census",
    "census_bruteforce",
    "census_residuals",
    "census_bounds",
    "census_report",
    "bondy_bound",
    "bondy_refined_bound",
    "bondy_weighted_sum",
    "thomasse_bound",
    "triangle_counts",
]
