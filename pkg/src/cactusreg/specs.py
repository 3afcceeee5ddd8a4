"""Builder specs: short strings that name a graph.

    cycle:5  path:4  complete:5  star:3  empty:2  diamond
    lemma41:k,m1,m2      C_k, K_m1 on edge {1,2}, K_m2 at vertex 1
    lemma42:k,m1,m2      C_k, K_m1 at vertex 1, K_m2 at vertex 2
    paper:G1  paper:G2   the two chain graphs K2,C4,C3,C4,K2 and K2,C4,C4,K2
    chain:K2,C4,C3/1,K3  blocks glued end to end (Ck/d: leave d steps on)
    sum:A+B@vertex       glue vertex 1 of B onto vertex 1 of A
    sum:A+B+C@edge       glue edge {1,2} of each summand onto edge {1,2}

Summands of ``sum:`` are specs themselves and are folded left to right.
"""

from __future__ import annotations

from .cm_cactus import chain_graph, lemma41_family, lemma42_family, paper_example_graphs
from .errors import GraphError, SpecError
from .graph import Graph, clique_sum, complete, cycle, diamond, empty, path, star

SPEC_HELP = __doc__.split("\n", 2)[2].strip("\n")


def _ints(arg: str, count: int, name: str) -> list[int]:
    parts = [p.strip() for p in arg.split(",")] if arg else []
    if len(parts) != count or not all(p.isdigit() for p in parts):
        raise SpecError(f"{name} needs {count} comma-separated integers, got {arg!r}")
    return [int(p) for p in parts]


_SIMPLE = {
    "cycle": (cycle, 3),
    "path": (path, 1),
    "complete": (complete, 1),
    "star": (star, 1),
    "empty": (empty, 0),
}


def build(spec: str) -> Graph:
    """Graph named by a builder spec; raises SpecError on bad input."""
    spec = spec.strip()
    head, _, arg = spec.partition(":")
    head = head.lower()
    try:
        if head == "sum":
            return _build_sum(arg)
        if head in _SIMPLE:
            fn, least = _SIMPLE[head]
            (n,) = _ints(arg, 1, head)
            if n < least:
                raise SpecError(f"{head} needs at least {least}")
            return fn(n)
        if head == "diamond":
            if arg:
                raise SpecError("diamond takes no argument")
            return diamond()
        if head == "lemma41":
            return lemma41_family(*_ints(arg, 3, head))
        if head == "lemma42":
            return lemma42_family(*_ints(arg, 3, head))
        if head == "paper":
            names = {"G1": 0, "G2": 1}
            if arg.upper() not in names:
                raise SpecError("paper: expects G1 or G2")
            return paper_example_graphs()[names[arg.upper()]]
        if head == "chain":
            return chain_graph(arg)
    except SpecError:
        raise
    except GraphError as exc:
        raise SpecError(f"{spec!r}: {exc}") from None
    raise SpecError(f"unknown builder {head!r} in {spec!r}")


def _build_sum(arg: str) -> Graph:
    body, at, how = arg.rpartition("@")
    if not at or how not in ("vertex", "edge"):
        raise SpecError("sum: needs a trailing @vertex or @edge")
    parts = [p for p in body.split("+")]
    if len(parts) < 2 or not all(p.strip() for p in parts):
        raise SpecError("sum: needs at least two '+'-separated summands")
    glue = [1] if how == "vertex" else [1, 2]
    summands = []
    for p in parts:
        H = build(p)
        if H.n < len(glue) or not H.is_clique(glue):
            raise SpecError(f"summand {p.strip()!r} has no clique on {glue}")
        summands.append(H)
    G = summands[0]
    for H in summands[1:]:
        G, _ = clique_sum(G, H, glue, glue)
    return G
