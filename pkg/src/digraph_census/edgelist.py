"""Plain-text edge-list format.

The first non-comment line holds the vertex count ``n``; each following
line is a whitespace-separated ``u v`` pair of 0-indexed vertices. Lines
starting with ``#`` and blank lines are ignored. Loops, duplicates and
out-of-range endpoints are rejected with the offending line number.
"""

import sys
from pathlib import Path
from typing import TextIO

from .digraph import Digraph
from .errors import EdgeListError


def parse_edge_list(text: str) -> Digraph:
    n = None
    edges = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise EdgeListError(f"expected vertex count, got {line!r}", lineno)
            try:
                n = int(fields[0])
            except ValueError:
                raise EdgeListError(f"vertex count is not an integer: {fields[0]!r}", lineno) from None
            if n < 0:
                raise EdgeListError(f"negative vertex count {n}", lineno)
            continue
        if len(fields) != 2:
            raise EdgeListError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListError(f"non-integer vertex in {line!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(f"vertex out of range 0..{n - 1} in {line!r}", lineno)
        if u == v:
            raise EdgeListError(f"loop at vertex {u}", lineno)
        if (u, v) in seen:
            raise EdgeListError(f"duplicate edge {u} {v} (first on line {seen[u, v]})", lineno)
        seen[u, v] = lineno
        edges.append((u, v))
    if n is None:
        raise EdgeListError("missing vertex count line")
    return Digraph(n, edges)


def read_edge_list(source) -> Digraph:
    """Read from a path, ``"-"`` for stdin, or an open text stream."""
    if hasattr(source, "read"):
        return parse_edge_list(source.read())
    if str(source) == "-":
        return parse_edge_list(sys.stdin.read())
    return parse_edge_list(Path(source).read_text())


def format_edge_list(g: Digraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(str(g.n))
    lines.extend(f"{u} {v}" for u, v in g.edge_list())
    return "\n".join(lines) + "\n"


def write_edge_list(g: Digraph, stream: TextIO, comment: str | None = None) -> None:
    stream.write(format_edge_list(g, comment))
