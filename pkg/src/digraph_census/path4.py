"""Four-vertex path statistics for 3-free digraphs.

In a 3-free digraph every 4-vertex set carries 0, 1 or 4 directed
4-vertex paths (4 exactly when it spans a directed 4-cycle, a *square*).
Over all ``n**4`` vertex 4-tuples this splits the tuples into

    S  tuples of distinct vertices spanning a square  (24 per square)
    R  tuples of distinct vertices spanning exactly one path
    N  everything else, repeated vertices included

so that ``24 P4 = 4S + R`` and ``n**4 = R + S + N``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .bounds import BoundReport
from .digraph import Digraph, count_induced_p3, count_paths, count_walks, is_k_free, min_out_degree
from .errors import DigraphError, PreconditionError


def require_three_free(g: Digraph) -> None:
    if not is_k_free(g, 3):
        raise PreconditionError("digraph has a directed cycle of length at most 3")


@dataclass(frozen=True)
class FourTupleStats:
    n: int
    T: int
    squares: int
    P4: int

    @property
    def S(self) -> int:
        return 24 * self.squares

    @property
    def R(self) -> int:
        return 24 * (self.P4 - 4 * self.squares)

    @property
    def N(self) -> int:
        return self.n**4 - self.R - self.S

    def identity_residuals(self) -> dict[str, int]:
        return {
            "24P4 - (4S + R)": 24 * self.P4 - (4 * self.S + self.R),
            "24P4 - (n^4 + 3S - N)": 24 * self.P4 - (self.n**4 + 3 * self.S - self.N),
        }

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "T": self.T,
            "squares": self.squares,
            "S": self.S,
            "P4": self.P4,
            "R": self.R,
            "N": self.N,
        }


def two_step_count(g: Digraph, u: int, v: int) -> int:
    """Number of ``x`` with ``u -> x -> v``."""
    return (g.out_bits[u] & g.in_bits[v]).bit_count()


def count_squares(g: Digraph) -> int:
    """Directed 4-cycles, via antipodal pairs ``{u, v}``.

    Each square ``u x v y`` is fixed by an antipodal pair and one 2-step
    connection each way; every square has two antipodal pairs.
    """
    require_three_free(g)
    out, inn = g.out_bits, g.in_bits
    total = 0
    for u in range(g.n):
        for v in range(u + 1, g.n):
            fwd = (out[u] & inn[v]).bit_count()
            if fwd:
                total += fwd * (out[v] & inn[u]).bit_count()
    return total // 2


def m_count(g: Digraph, u: int, v: int) -> int:
    """``|M(u, v)|``: middles ``x`` of induced paths ``u -> x -> v``."""
    if u == v:
        raise DigraphError("m(u, v) needs distinct vertices")
    if g.adjacent(u, v):
        return 0
    out_only = g.out_bits[u] & ~g.in_bits[u]
    in_only = g.in_bits[v] & ~g.out_bits[v]
    return (out_only & in_only).bit_count()


def four_tuple_stats(g: Digraph) -> FourTupleStats:
    require_three_free(g)
    return FourTupleStats(
        n=g.n,
        T=count_induced_p3(g),
        squares=count_squares(g),
        P4=count_paths(g, 4),
    )


def check_p4_bounds(g: Digraph, stats: FourTupleStats | None = None) -> list[BoundReport]:
    if stats is None:
        stats = four_tuple_stats(g)
    n = stats.n
    return [
        BoundReport("S_le_3n_over_2_T", stats.S, Fraction(3 * n, 2) * stats.T),
        BoundReport("two_thirds_S_le_N", Fraction(2, 3) * stats.S, stats.N),
        BoundReport("P4_le_4_over_75_n4", stats.P4, Fraction(4, 75) * n**4),
    ]


def check_outdegree_corollary(g: Digraph) -> BoundReport:
    """Minimum out-degree cubed is at most ``4 n^3 / 75``."""
    require_three_free(g)
    if g.n == 0:
        raise DigraphError("corollary needs at least one vertex")
    d = min_out_degree(g)
    return BoundReport("min_outdeg_cubed_le_4_over_75_n3", d**3, Fraction(4, 75) * g.n**3)


def p4_report(g: Digraph) -> dict:
    stats = four_tuple_stats(g)
    identities = stats.identity_residuals()
    identities["W4 - P4"] = count_walks(g, 4) - stats.P4
    bounds = check_p4_bounds(g, stats)
    if g.n:
        bounds.append(check_outdegree_corollary(g))
    return {
        **stats.to_json(),
        "identities": identities,
        "bounds": [b.to_json() for b in bounds],
    }


# -- set-wise oracles ---------------------------------------------------------

def paths_on_set(g: Digraph, X) -> int:
    """Number of 4-vertex (or ``len(X)``-vertex) directed paths with vertex set ``X``."""
    return sum(
        all(g.has_edge(a, b) for a, b in zip(p, p[1:]))
        for p in itertools.permutations(X)
    )


def has_square_on(g: Digraph, X) -> bool:
    a = X[0]
    return any(
        g.has_edge(a, p[0]) and g.has_edge(p[0], p[1]) and g.has_edge(p[1], p[2]) and g.has_edge(p[2], a)
        for p in itertools.permutations(X[1:])
    )


def edges_on(g: Digraph, X) -> int:
    return sum(g.has_edge(a, b) for a, b in itertools.permutations(X, 2))


def four_set_census(g: Digraph) -> dict:
    """Enumerate every 4-set: distribution of path counts, square count,
    and the number of squares whose vertex set carries extra edges."""
    dist: dict[int, int] = {}
    squares = 0
    non_induced = 0
    for X in itertools.combinations(range(g.n), 4):
        t = paths_on_set(g, X)
        dist[t] = dist.get(t, 0) + 1
        if has_square_on(g, X):
            squares += 1
            if edges_on(g, X) != 4:
                non_induced += 1
    return {"t_distribution": dist, "squares": squares, "non_induced_squares": non_induced}
