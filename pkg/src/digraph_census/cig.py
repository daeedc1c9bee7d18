"""Circular interval digraphs.

Vertices ``0..n-1`` sit clockwise on a circle and vertex ``i`` sends edges
to the next ``a[i]`` vertices. The extent vector ``a`` is the only stored
state; in-neighbourhoods, lengths and all extremal quantities are derived.

An extent vector describes a circular interval digraph exactly when
``a[i+1] >= a[i] - 1`` around the circle: if ``i`` reaches ``i + a[i]``
then every vertex in between must reach it too.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, total_ordering
from typing import Iterable, Sequence

from .bounds import BoundReport
from .digraph import Digraph, count_induced_p3
from .errors import DigraphError, PreconditionError


@total_ordering
class _Infinity:
    """Length of the shortest non-edge when there is none."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("inf")

    def __repr__(self):
        return "INF"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


class CircularIntervalDigraph:
    def __init__(self, extents: Sequence[int]):
        a = tuple(int(x) for x in extents)
        n = len(a)
        for i, x in enumerate(a):
            if not 0 <= x <= max(n - 1, 0):
                raise DigraphError(f"extent a[{i}]={x} outside 0..{n - 1}")
        for i in range(n):
            if a[(i + 1) % n] < a[i] - 1:
                raise DigraphError(
                    f"extents violate the interval property at vertex {i}: "
                    f"a[{i}]={a[i]} but a[{(i + 1) % n}]={a[(i + 1) % n]}"
                )
        self.n = n
        self.extents = a

    @classmethod
    def from_digraph(cls, g: Digraph) -> "CircularIntervalDigraph":
        """Recover extents, taking the vertex numbering as the circular order."""
        n = g.n
        a = []
        for i in range(n):
            k = g.out_degree(i)
            expected = {(i + d) % n for d in range(1, k + 1)}
            if set(g.out_neighbors(i)) != expected:
                raise DigraphError(
                    f"out-neighbours of {i} are not the next {k} vertices clockwise"
                )
            a.append(k)
        return cls(a)

    @classmethod
    def uniform(cls, n: int, beta: int) -> "CircularIntervalDigraph":
        return cls([beta] * n)

    def distance(self, u: int, v: int) -> int:
        return (v - u) % self.n

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and self.distance(u, v) <= self.extents[u]

    def adjacent(self, u: int, v: int) -> bool:
        return self.has_edge(u, v) or self.has_edge(v, u)

    def out_degree(self, v: int) -> int:
        return self.extents[v]

    def in_degree(self, v: int) -> int:
        return self.digraph.in_degree(v)

    @cached_property
    def digraph(self) -> Digraph:
        n = self.n
        return Digraph(
            n, ((i, (i + d) % n) for i in range(n) for d in range(1, self.extents[i] + 1))
        )

    @cached_property
    def is_two_free(self) -> bool:
        n, a = self.n, self.extents
        for i in range(n):
            for d in range(1, a[i] + 1):
                if n - d <= a[(i + d) % n]:
                    return False
        return True

    def require_two_free(self) -> None:
        if not self.is_two_free:
            raise PreconditionError(f"circular interval digraph {self.extents} has a digon")

    def edges_of_length(self, length: int) -> list[tuple[int, int]]:
        if length <= 0:
            return []
        return [(i, (i + length) % self.n) for i in range(self.n) if self.extents[i] >= length]

    def with_extents(self, changes: dict[int, int]) -> "CircularIntervalDigraph":
        a = list(self.extents)
        for i, x in changes.items():
            a[i] = x
        return CircularIntervalDigraph(a)

    def __eq__(self, other):
        if not isinstance(other, CircularIntervalDigraph):
            return NotImplemented
        return self.extents == other.extents

    def __hash__(self):
        return hash(self.extents)

    def __repr__(self):
        return f"CircularIntervalDigraph({list(self.extents)})"


def clockwise_distance(g: CircularIntervalDigraph, u: int, v: int) -> int:
    return g.distance(u, v)


# -- extremal state ---------------------------------------------------------

@dataclass(frozen=True)
class ExtremeState:
    alpha: object  # int, or INF when there is no non-edge
    beta: int
    xi: int
    n: int

    @property
    def gamma(self) -> int | None:
        if self.alpha is INF:
            return None
        return 4 * (self.alpha + self.beta) - 3 * self.n

    @property
    def epsilon(self) -> int:
        return 0 if self.beta > self.alpha else 1

    def to_json(self) -> dict:
        return {
            "alpha": "inf" if self.alpha is INF else self.alpha,
            "beta": self.beta,
            "xi": self.xi,
            "gamma": self.gamma,
            "epsilon": self.epsilon,
        }


def _length_histograms(g: CircularIntervalDigraph) -> tuple[list[int], list[int]]:
    """Counts of edges and of ordered non-edge pairs by length."""
    n = g.n
    edges = [0] * (n + 1)
    non_edges = [0] * (n + 1)
    for u in range(n):
        for d in range(1, n):
            v = (u + d) % n
            if d <= g.extents[u]:
                edges[d] += 1
            elif not g.has_edge(v, u):
                non_edges[d] += 1
    return edges, non_edges


def extreme_state(g: CircularIntervalDigraph) -> ExtremeState:
    edges, non_edges = _length_histograms(g)
    beta = max((d for d, c in enumerate(edges) if c), default=0)
    alpha = min((d for d, c in enumerate(non_edges) if c), default=INF)
    xi = 0
    shorter = 0
    for d in range(len(edges)):
        xi += edges[d] * shorter
        shorter += non_edges[d]
    return ExtremeState(alpha=alpha, beta=beta, xi=xi, n=g.n)


def xi(g: CircularIntervalDigraph) -> int:
    return extreme_state(g).xi


def longest_edges(g: CircularIntervalDigraph, state: ExtremeState | None = None) -> list[tuple[int, int]]:
    state = state or extreme_state(g)
    return g.edges_of_length(state.beta)


def shortest_non_edges(g: CircularIntervalDigraph, state: ExtremeState | None = None) -> list[tuple[int, int]]:
    """Ordered pairs ``(u, v)`` of length ``alpha`` with neither ``uv`` nor ``vu`` an edge."""
    state = state or extreme_state(g)
    if state.alpha is INF:
        return []
    n, alpha = g.n, state.alpha
    return [(u, (u + alpha) % n) for u in range(n) if not g.adjacent(u, (u + alpha) % n)]


# -- the uniform family -------------------------------------------------------

def generate_G_beta(n: int, beta: int) -> CircularIntervalDigraph:
    if beta < 0 or 2 * beta >= n:
        raise PreconditionError(f"G_beta needs 0 <= beta < n/2 (got n={n}, beta={beta})")
    return CircularIntervalDigraph.uniform(n, beta)


def p3_closed_form(n: int, beta: int) -> Fraction:
    """``n (n - 2 beta - 1)(2 beta - n/2 + 1)``.

    This counts the induced 2-edge paths of ``G_beta`` only when
    ``3 beta >= n - 1``; below that the count is ``n beta (beta+1) / 2``
    (see :func:`p3_G_beta`).
    """
    if beta < 0 or 2 * beta >= n:
        raise PreconditionError(f"need 0 <= beta < n/2 (got n={n}, beta={beta})")
    return n * (n - 2 * beta - 1) * (2 * beta - Fraction(n, 2) + 1)


def p3_G_beta(n: int, beta: int) -> int:
    """Induced 2-edge paths of ``G_beta`` for every ``0 <= beta < n/2``.

    From each start ``u``, a path ending at clockwise distance ``D`` needs
    ``beta < D <= min(2 beta, n - beta - 1)`` and has ``2 beta + 1 - D``
    middle vertices.
    """
    if beta < 0 or 2 * beta >= n:
        raise PreconditionError(f"need 0 <= beta < n/2 (got n={n}, beta={beta})")
    top = min(2 * beta, n - beta - 1)
    return n * sum(2 * beta + 1 - d for d in range(beta + 1, top + 1))


def h_beta_edges(n: int, beta: int) -> list[tuple[int, int]]:
    if beta < 0 or 2 * beta >= n:
        raise PreconditionError(f"H_beta needs 0 <= beta < n/2 (got n={n}, beta={beta})")
    if beta == 0:
        return []
    return [(i, (i + beta) % n) for i in range(n)]


def _check_subset_of_h_beta(X, n: int, beta: int) -> frozenset:
    X = frozenset((int(u), int(v)) for u, v in X)
    allowed = set(h_beta_edges(n, beta))
    bad = sorted(X - allowed)
    if bad:
        raise PreconditionError(f"pairs {bad} are not edges of length {beta} on {n} vertices")
    return X


def pendant_count(X: Iterable[tuple[int, int]], n: int, beta: int) -> int:
    """Vertices incident with exactly one edge of ``X``, a subset of ``H_beta``."""
    X = _check_subset_of_h_beta(X, n, beta)
    incidences = [0] * n
    for u, v in X:
        incidences[u] += 1
        incidences[v] += 1
    return sum(1 for c in incidences if c == 1)


def G_beta_minus(n: int, beta: int, X: Iterable[tuple[int, int]]) -> CircularIntervalDigraph:
    X = _check_subset_of_h_beta(X, n, beta)
    a = [beta] * n
    for u, _ in X:
        a[u] = beta - 1
    return CircularIntervalDigraph(a)


def p3_of_Gbeta_minus_X(n: int, beta: int, X: Iterable[tuple[int, int]]) -> int:
    """Induced 2-edge paths of ``G_beta`` with the ``H_beta`` edges ``X`` removed,
    from the closed form ``P(G_beta) + |X| (8 beta - 3n) + t(X)``.

    Only proven for ``8 beta - 3n >= 2``; refuses otherwise.
    """
    if 8 * beta - 3 * n < 2:
        raise PreconditionError(f"needs 8*beta - 3n >= 2 (got n={n}, beta={beta})")
    X = _check_subset_of_h_beta(X, n, beta)
    value = p3_closed_form(n, beta) + len(X) * (8 * beta - 3 * n) + pendant_count(X, n, beta)
    assert value.denominator == 1
    return int(value)


def check_gbeta_inequality(n: int, beta: int, X: Iterable[tuple[int, int]]) -> BoundReport:
    delta = 8 * beta - 3 * n
    if n < 4 or not -2 <= delta <= 2:
        raise PreconditionError(f"needs n >= 4 and -2 <= 8*beta - 3n <= 2 (got n={n}, beta={beta})")
    X = _check_subset_of_h_beta(X, n, beta)
    lhs = len(X) * delta + pendant_count(X, n, beta) + p3_closed_form(n, beta)
    return BoundReport("gbeta_minus_x_le_n3_over_16", lhs, Fraction(n**3, 16))


def cig_bound(g: CircularIntervalDigraph) -> BoundReport:
    g.require_two_free()
    return BoundReport("cig_n3_over_16", count_induced_p3(g.digraph), Fraction(g.n**3, 16))


# -- single-pair toggles ------------------------------------------------------

def _triple_is_p3(g: Digraph, a: int, b: int, c: int) -> bool:
    for x, y, z in itertools.permutations((a, b, c)):
        if g.has_edge(x, y) and g.has_edge(y, z):
            return not (g.adjacent(x, z) or g.has_edge(y, x) or g.has_edge(z, y))
    return False


def pair_delta(before: Digraph, after: Digraph, u: int, v: int) -> int:
    """Change in induced 2-edge paths when only the pair ``{u, v}`` differs.

    Only triples containing both ``u`` and ``v`` can change.
    """
    return sum(
        _triple_is_p3(after, u, v, w) - _triple_is_p3(before, u, v, w)
        for w in range(before.n)
        if w != u and w != v
    )


def toggle(g: CircularIntervalDigraph, u: int, v: int, mode: str) -> CircularIntervalDigraph:
    """Remove a longest edge or add a shortest non-edge ``uv``."""
    state = extreme_state(g)
    if mode == "remove":
        if not g.has_edge(u, v) or g.distance(u, v) != state.beta:
            raise PreconditionError(f"({u}, {v}) is not a longest edge (beta={state.beta})")
        return g.with_extents({u: g.extents[u] - 1})
    if mode == "add":
        if g.adjacent(u, v) or g.distance(u, v) != state.alpha:
            raise PreconditionError(f"({u}, {v}) is not a shortest non-edge (alpha={state.alpha})")
        return g.with_extents({u: g.extents[u] + 1})
    raise ValueError(f"mode must be 'add' or 'remove', got {mode!r}")


def toggle_delta(g: CircularIntervalDigraph, u: int, v: int, mode: str) -> int:
    """Induced 2-edge path change from toggling ``uv``, by local recount."""
    g.require_two_free()
    h = toggle(g, u, v, mode)
    return pair_delta(g.digraph, h.digraph, u, v)


def common_bridge(g: CircularIntervalDigraph, u: int, v: int) -> int:
    """``|N+(v) & N-(u)|``: vertices closing ``uv`` into a directed triangle."""
    d = g.digraph
    return (d.out_bits[v] & d.in_bits[u]).bit_count()


def remove_delta_formula(g: CircularIntervalDigraph, u: int, v: int) -> int:
    """Predicted change for deleting the longest edge ``uv``."""
    c = common_bridge(g, u, v)
    length = g.distance(u, v)
    return -(g.in_degree(u) + g.out_degree(v) - 2 * c) + (length - 1 + c)


def add_delta_formula(g: CircularIntervalDigraph, u: int, v: int) -> int:
    """Predicted change for inserting the shortest non-edge ``uv``.

    Exact when every vertex strictly inside ``uv`` is an out-neighbour of
    ``u`` and an in-neighbour of ``v``, and ``u``, ``v`` share no in- or
    out-neighbour.
    """
    c = common_bridge(g, u, v)
    length = g.distance(u, v)
    return -(length - 1 + c) + (g.in_degree(u) + g.out_degree(v) - 2 * c)


def add_formula_applies(g: CircularIntervalDigraph, u: int, v: int) -> bool:
    d = g.digraph
    n = g.n
    inside = all(
        d.has_edge(u, (u + k) % n) and d.has_edge((u + k) % n, v)
        for k in range(1, g.distance(u, v))
    )
    shared = (d.in_bits[u] & d.in_bits[v]) | (d.out_bits[u] & d.out_bits[v])
    return inside and not shared


# -- slacks -------------------------------------------------------------------

def slacks(g: CircularIntervalDigraph, v: int, state: ExtremeState | None = None) -> tuple[int, int, int, int]:
    """``(s+, s-, t+, t-)``: degree excess over ``alpha - 1`` and shortfall from ``beta``."""
    state = state or extreme_state(g)
    if state.alpha is INF:
        raise PreconditionError("slacks need a finite alpha (digraph has no non-edge)")
    dout, din = g.out_degree(v), g.in_degree(v)
    return (
        dout - (state.alpha - 1),
        din - (state.alpha - 1),
        state.beta - dout,
        state.beta - din,
    )


def is_degree_bounded(g: CircularIntervalDigraph) -> bool:
    """``alpha - 1 <= deg+/-(v) <= beta`` at every vertex."""
    state = extreme_state(g)
    if state.alpha is INF:
        return False
    return all(min(slacks(g, v, state)) >= 0 for v in range(g.n))


def pair_delta_formula(g: CircularIntervalDigraph, u: int, v: int, state: ExtremeState | None = None) -> int:
    """Slack-form prediction of the change from toggling extreme pair ``uv``.

    For a longest edge: ``gamma + 2 s+(v) + 2 s-(u) - 2``; for a shortest
    non-edge: ``2 t+(v) + 2 t-(u) - gamma - 2``. Derived assuming no vertex
    is non-adjacent to both ``u`` and ``v``.
    """
    state = state or extreme_state(g)
    gamma = state.gamma
    if gamma is None:
        raise PreconditionError("needs a finite alpha")
    sp_v, _, tp_v, _ = slacks(g, v, state)
    _, sm_u, _, tm_u = slacks(g, u, state)
    if g.has_edge(u, v):
        return gamma + 2 * sp_v + 2 * sm_u - 2
    return 2 * tp_v + 2 * tm_u - gamma - 2


# -- augmenting sequences -----------------------------------------------------

EDGE = "edge"
NON_EDGE = "non-edge"


@dataclass(frozen=True)
class AugmentingSequence:
    vertices: tuple[int, ...]
    kinds: tuple[str, ...]
    beta_exceeds_alpha: bool

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.vertices, self.vertices[1:]))

    @property
    def X(self) -> frozenset:
        return frozenset(p for p, k in zip(self.pairs, self.kinds) if k == EDGE)

    @property
    def Y(self) -> frozenset:
        return frozenset(p for p, k in zip(self.pairs, self.kinds) if k == NON_EDGE)

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "kinds": list(self.kinds),
            "X": sorted(map(list, self.X)),
            "Y": sorted(map(list, self.Y)),
            "beta_exceeds_alpha": self.beta_exceeds_alpha,
        }


def extreme_pairs(g: CircularIntervalDigraph, state: ExtremeState | None = None) -> dict[tuple[int, int], str]:
    state = state or extreme_state(g)
    pairs = {p: EDGE for p in longest_edges(g, state)}
    pairs.update({p: NON_EDGE for p in shortest_non_edges(g, state)})
    return pairs


def is_alternating(seq: AugmentingSequence, extreme: dict[tuple[int, int], str]) -> bool:
    pairs = seq.pairs
    if len(set(pairs)) != len(pairs):
        return False
    if any(extreme.get(p) != k for p, k in zip(pairs, seq.kinds)):
        return False
    return all(a != b for a, b in zip(seq.kinds, seq.kinds[1:]))


def _extensions(extreme, used, vertex, kind, forward):
    other = NON_EDGE if kind == EDGE else EDGE
    idx = 0 if forward else 1
    return sorted(
        p for p, k in extreme.items() if k == other and p[idx] == vertex and p not in used
    )


def is_maximal(seq: AugmentingSequence, extreme: dict[tuple[int, int], str]) -> bool:
    if not seq.kinds:
        return True
    used = set(seq.pairs)
    return not (
        _extensions(extreme, used, seq.vertices[-1], seq.kinds[-1], True)
        or _extensions(extreme, used, seq.vertices[0], seq.kinds[0], False)
    )


def find_augmenting_sequence(g: CircularIntervalDigraph) -> AugmentingSequence:
    """A maximal alternating sequence of longest edges and shortest non-edges.

    Starts from the smallest extreme pair and greedily extends forward, then
    backward, always taking the smallest admissible pair. When
    ``beta <= alpha`` the transform is not needed and the empty sequence is
    returned.
    """
    state = extreme_state(g)
    extreme = extreme_pairs(g, state)
    if not extreme:
        raise PreconditionError("digraph has no longest edge and no shortest non-edge")
    if not state.beta > state.alpha:
        return AugmentingSequence((), (), False)
    start = min(extreme)
    vertices = [start[0], start[1]]
    kinds = [extreme[start]]
    used = {start}
    while True:
        nxt = _extensions(extreme, used, vertices[-1], kinds[-1], True)
        if not nxt:
            break
        used.add(nxt[0])
        vertices.append(nxt[0][1])
        kinds.append(extreme[nxt[0]])
    while True:
        prv = _extensions(extreme, used, vertices[0], kinds[0], False)
        if not prv:
            break
        used.add(prv[0])
        vertices.insert(0, prv[0][0])
        kinds.insert(0, extreme[prv[0]])
    return AugmentingSequence(tuple(vertices), tuple(kinds), True)


def apply_augmenting_transform(g: CircularIntervalDigraph, seq: AugmentingSequence) -> CircularIntervalDigraph:
    """Delete the sequence's longest edges and insert its shortest non-edges."""
    state = extreme_state(g)
    if state.alpha is INF or state.alpha > state.beta:
        raise PreconditionError(
            f"transform needs alpha <= beta (alpha={state.alpha}, beta={state.beta})"
        )
    extreme = extreme_pairs(g, state)
    for p, k in zip(seq.pairs, seq.kinds):
        if extreme.get(p) != k:
            raise PreconditionError(f"{p} is not a {k} extreme pair")
    Y = seq.Y
    for u, v in Y:
        if (v, u) in Y:
            raise PreconditionError(f"both orientations of pair ({u}, {v}) are in Y")
    changes: dict[int, int] = {}
    for u, _ in seq.X:
        changes[u] = changes.get(u, g.extents[u]) - 1
    for u, _ in Y:
        changes[u] = changes.get(u, g.extents[u]) + 1
    h = g.with_extents(changes)
    h.require_two_free()
    return h


# -- reporting ----------------------------------------------------------------

def cig_report(g: CircularIntervalDigraph) -> dict:
    state = extreme_state(g)
    p3 = count_induced_p3(g.digraph)
    bound = BoundReport("cig_n3_over_16", p3, Fraction(g.n**3, 16))
    return {
        "n": g.n,
        "extents": list(g.extents),
        "two_free": g.is_two_free,
        **state.to_json(),
        "p3": p3,
        "bound_16": bound.to_json(),
    }
