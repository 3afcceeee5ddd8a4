"""Plain-text edge lists.

Format: an optional header line ``n m`` followed by one ``u v`` pair per
line, 1-indexed.  ``#`` starts a comment, blank lines are ignored.  A
leading two-number line is read as the header when the number of
remaining pairs equals ``m`` and no label exceeds ``n``; otherwise it is
an ordinary edge.  The writer always emits the header, so isolated
vertices survive a round trip.
"""

from __future__ import annotations

from pathlib import Path

from .errors import EdgeListError, GraphError
from .graph import Graph


def parse_edgelist(text: str) -> Graph:
    rows: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"non-integer token in {line!r}", lineno) from None
        rows.append((a, b, lineno))

    n = None
    if rows:
        hn, hm, _ = rows[0]
        rest = rows[1:]
        if hn >= 0 and hm == len(rest) and all(max(u, v) <= hn for u, v, _ in rest):
            n = hn
            rows = rest
    edges = []
    for u, v, lineno in rows:
        if u < 1 or v < 1:
            raise EdgeListError("vertex labels start at 1", lineno)
        if u == v:
            raise EdgeListError(f"loop at vertex {u}", lineno)
        edges.append((u, v))
    if n is None:
        n = max((max(e) for e in edges), default=0)
    try:
        return Graph.from_edges(n, edges)
    except GraphError as exc:
        raise EdgeListError(str(exc)) from None


def read_edgelist(path) -> Graph:
    return parse_edgelist(Path(path).read_text())


def format_edgelist(G: Graph) -> str:
    lines = [f"{G.n} {G.num_edges()}"]
    lines += [f"{u} {v}" for u, v in G.sorted_edges()]
    return "\n".join(lines) + "\n"


def write_edgelist(G: Graph, path) -> None:
    Path(path).write_text(format_edgelist(G))
