"""Extremal constructions with known path counts."""

from .digraph import Digraph
from .errors import PreconditionError
from . import limits


def recursive_family(i: int) -> Digraph:
    """Four copies of level ``i - 1`` on a directed square, all edges
    between cyclically consecutive copies. Level 0 is a single vertex.

    Copy ``j`` occupies the index block ``[j * 4**(i-1), (j+1) * 4**(i-1))``.
    """
    if i < 0:
        raise PreconditionError(f"level must be nonnegative, got {i}")
    limits.check("recursive_family", 4**i)
    n = 1
    edges: list[tuple[int, int]] = []
    for _ in range(i):
        block = n
        nxt = []
        for j in range(4):
            off = j * block
            nxt.extend((u + off, v + off) for u, v in edges)
            succ = ((j + 1) % 4) * block
            nxt.extend((off + a, succ + b) for a in range(block) for b in range(block))
        edges = nxt
        n *= 4
    return Digraph(n, edges)


def layered_tournaments(n: int) -> Digraph:
    """Four transitive tournaments ``S1..S4`` of size ``n/4`` joined
    ``S1 -> S2 -> S3 -> S4 -> S1``. Inside a layer ``i -> j`` iff ``i < j``.
    """
    if n % 4 or n < 0:
        raise PreconditionError(f"layered family needs n divisible by 4, got {n}")
    limits.check("layered_tournaments", n)
    k = n // 4
    edges = []
    for layer in range(4):
        off = layer * k
        edges.extend((off + a, off + b) for a in range(k) for b in range(a + 1, k))
        succ = ((layer + 1) % 4) * k
        edges.extend((off + a, succ + b) for a in range(k) for b in range(k))
    return Digraph(n, edges)


def layer_of(n: int, v: int) -> int:
    return v // (n // 4)
