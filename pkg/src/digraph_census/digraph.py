"""Immutable simple digraphs and the walk/path counting oracles.

Vertices are the dense integers ``0..n-1``. Adjacency is held twice: as
sorted neighbour tuples for iteration and as Python-int bitsets for the
word-parallel intersections that drive the census and path kernels.
"""

from __future__ import annotations

import enum
from typing import Hashable, Iterable, Iterator, Sequence

from .errors import DigraphError, PreconditionError


class PathKind(enum.Enum):
    WALK = "walk"
    PATH = "path"
    INDUCED = "induced"


def _bits(vertices: Iterable[int]) -> int:
    b = 0
    for v in vertices:
        b |= 1 << v
    return b


def iter_bits(b: int) -> Iterator[int]:
    """Yield the set positions of ``b`` in increasing order."""
    while b:
        low = b & -b
        yield low.bit_length() - 1
        b ^= low


class Digraph:
    """A simple loop-free digraph on vertices ``0..n-1``.

    At most one edge per ordered pair; digons (``uv`` and ``vu`` both
    present) are allowed by the type but rejected by the operations that
    assume 2-freeness.
    """

    __slots__ = ("n", "edges", "out_bits", "in_bits", "_out", "_in", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise DigraphError(f"vertex count must be nonnegative, got {n}")
        seen = set()
        out_bits = [0] * n
        in_bits = [0] * n
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise DigraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise DigraphError(f"loop at vertex {u}")
            if (u, v) in seen:
                raise DigraphError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            out_bits[u] |= 1 << v
            in_bits[v] |= 1 << u
        self.n = n
        self.edges = frozenset(seen)
        self.out_bits = tuple(out_bits)
        self.in_bits = tuple(in_bits)
        self._out = tuple(tuple(iter_bits(b)) for b in out_bits)
        self._in = tuple(tuple(iter_bits(b)) for b in in_bits)
        self._hash = None

    @classmethod
    def from_labeled_edges(
        cls, edges: Iterable[tuple[Hashable, Hashable]], vertices: Sequence[Hashable] = ()
    ) -> tuple["Digraph", dict]:
        """Build from arbitrary labels; returns the digraph and the label map.

        Labels are numbered in first-appearance order, ``vertices`` first.
        """
        index: dict = {}
        for v in vertices:
            index.setdefault(v, len(index))
        pairs = []
        for u, v in edges:
            pairs.append((index.setdefault(u, len(index)), index.setdefault(v, len(index))))
        return cls(len(index), pairs), index

    # -- queries ---------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.out_bits[u] >> v & 1)

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.out_bits[u] | self.in_bits[u]) >> v & 1)

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def out_degree(self, v: int) -> int:
        return len(self._out[v])

    def in_degree(self, v: int) -> int:
        return len(self._in[v])

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def non_edges(self) -> list[tuple[int, int]]:
        """Unordered non-adjacent pairs ``(u, v)`` with ``u < v``."""
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if not self.adjacent(u, v)
        ]

    def digons(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u, v in self.edges if u < v and (v, u) in self.edges)

    def is_tournament(self) -> bool:
        return self.m * 2 == self.n * (self.n - 1) and not self.digons()

    def require_digon_free(self) -> None:
        for u, v in self.edges:
            if u < v and self.out_bits[v] >> u & 1:
                raise PreconditionError(f"digraph has a digon on pair ({u}, {v})")

    # -- derived digraphs -------------------------------------------------

    def reverse(self) -> "Digraph":
        return Digraph(self.n, ((v, u) for u, v in self.edges))

    def relabel(self, perm: Sequence[int]) -> "Digraph":
        """Image under the vertex map ``v -> perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise DigraphError("relabel expects a permutation of 0..n-1")
        return Digraph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def with_edges(self, add: Iterable[tuple[int, int]] = (), remove: Iterable[tuple[int, int]] = ()) -> "Digraph":
        """Copy with ``remove`` deleted and ``add`` inserted."""
        remove = set(remove)
        missing = remove - self.edges
        if missing:
            raise DigraphError(f"cannot remove non-edges {sorted(missing)}")
        return Digraph(self.n, list((self.edges - remove)) + list(add))

    def toggle(self, u: int, v: int) -> "Digraph":
        if (u, v) in self.edges:
            return self.with_edges(remove=[(u, v)])
        return self.with_edges(add=[(u, v)])

    def induced(self, vertices: Sequence[int]) -> "Digraph":
        pos = {v: i for i, v in enumerate(vertices)}
        return Digraph(
            len(vertices),
            ((pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos),
        )

    # -- value semantics --------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.edges))
        return self._hash

    def __repr__(self):
        return f"Digraph(n={self.n}, m={self.m})"


# -- constructors used throughout the tests and CLI ------------------------

def directed_cycle(n: int) -> Digraph:
    return Digraph(n, ((i, (i + 1) % n) for i in range(n)) if n >= 2 else ())


def transitive_tournament(n: int) -> Digraph:
    return Digraph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def empty_digraph(n: int) -> Digraph:
    return Digraph(n)


# -- structural predicates and counts ---------------------------------------

def is_k_free(g: Digraph, k: int) -> bool:
    """True iff ``g`` has no directed cycle of length at most ``k``.

    A closed walk of length ``L`` through ``s`` contains a cycle of length
    at most ``L``, so it suffices to check whether any ``s`` is reachable
    from itself within ``k`` steps.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return True
    out = g.out_bits
    for s in range(g.n):
        frontier = out[s]
        reached = frontier
        for _ in range(k - 1):
            if reached >> s & 1:
                return False
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= out[v]
            frontier = nxt & ~reached
            if not frontier:
                break
            reached |= frontier
        if reached >> s & 1:
            return False
    return True


def count_walks(g: Digraph, s: int) -> int:
    """Number of ``s``-vertex directed walks, by DP over ``s - 1`` steps."""
    if s < 1:
        raise ValueError("s must be at least 1")
    ending = [1] * g.n
    for _ in range(s - 1):
        ending = [sum(ending[u] for u in g.in_neighbors(v)) for v in range(g.n)]
    return sum(ending)


def count_paths(g: Digraph, s: int) -> int:
    """Number of ``s``-vertex directed paths, by depth-limited DFS."""
    if s < 1:
        raise ValueError("s must be at least 1")
    if s > g.n:
        return 0
    if s == 1:
        return g.n
    out = g.out_bits

    def extend(v: int, visited: int, remaining: int) -> int:
        cand = out[v] & ~visited
        if remaining == 1:
            return cand.bit_count()
        return sum(extend(w, visited | 1 << w, remaining - 1) for w in iter_bits(cand))

    return sum(extend(v, 1 << v, s - 1) for v in range(g.n))


def count_induced_p3(g: Digraph) -> int:
    """Ordered triples ``(u, x, v)`` with ``ux``, ``xv`` edges and no other
    edge among ``{u, x, v}``."""
    total = 0
    out, inn = g.out_bits, g.in_bits
    for x in range(g.n):
        heads = out[x] & ~inn[x]
        if not heads:
            continue
        for u in iter_bits(inn[x] & ~out[x]):
            total += (heads & ~(out[u] | inn[u])).bit_count()
    return total


def count_induced_paths(g: Digraph, s: int) -> int:
    """Induced ``s``-vertex directed paths for general ``s`` by DFS.

    Each extension must be adjacent to the current end only, via a forward
    edge, and to no earlier path vertex.
    """
    if s < 1:
        raise ValueError("s must be at least 1")
    if s > g.n:
        return 0
    if s == 1:
        return g.n
    out, inn = g.out_bits, g.in_bits

    def extend(v: int, visited: int, touched: int, remaining: int) -> int:
        # touched: vertices adjacent to some path vertex other than v
        cand = out[v] & ~inn[v] & ~visited & ~touched
        if remaining == 1:
            return cand.bit_count()
        nbrs_v = out[v] | inn[v]
        return sum(
            extend(w, visited | 1 << w, touched | nbrs_v, remaining - 1)
            for w in iter_bits(cand)
        )

    return sum(extend(v, 1 << v, 0, s - 1) for v in range(g.n))


def count(g: Digraph, s: int, kind: PathKind) -> int:
    if kind is PathKind.WALK:
        return count_walks(g, s)
    if kind is PathKind.PATH:
        return count_paths(g, s)
    if s == 3:
        return count_induced_p3(g)
    return count_induced_paths(g, s)


def min_out_degree(g: Digraph) -> int:
    if g.n == 0:
        raise DigraphError("minimum out-degree of the empty vertex set is undefined")
    return min(len(o) for o in g._out)
