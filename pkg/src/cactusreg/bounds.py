"""Counted invariants of cycle-clique graphs and the regularity upper bounds
built from them.

A graph is *cycle-clique* when each block is an edge, a clique or an
induced cycle.  Cycle counts are per block: ``cycle_counts[k]`` is the
number of blocks that are chordless k-cycles, k >= 4.  Triangles are
cliques.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import BlockKindUnsupported, GraphError, NoBigCycle
from .graph import (
    BlockTag,
    Graph,
    VertexSet,
    block_cut_tree,
    block_kinds,
    connected_components,
    is_connected,
    is_indecomposable,
    maximal_cliques,
)

CSV_COLUMNS = (
    "n", "block_count", "c", "c_prime", "cycle_counts", "big_c",
    "paper_bound", "smk_bound",
    "is_block_graph", "is_cactus", "is_cycle_clique", "is_indecomposable",
)


@dataclass(frozen=True)
class InvariantReport:
    n: int
    block_count: int
    c: int
    c_prime: int
    cycle_counts: dict[int, int] = field(hash=False)
    big_c: int
    paper_bound: int
    smk_bound: int
    is_block_graph: bool
    is_cactus: bool
    is_cycle_clique: bool
    is_indecomposable: bool

    @property
    def class_tags(self) -> dict[str, bool]:
        return {
            "is_block_graph": self.is_block_graph,
            "is_cactus": self.is_cactus,
            "is_cycle_clique": self.is_cycle_clique,
            "is_indecomposable": self.is_indecomposable,
        }

    def to_dict(self) -> dict:
        d = {k: getattr(self, k) for k in CSV_COLUMNS}
        d["cycle_counts"] = {str(k): v for k, v in sorted(self.cycle_counts.items())}
        return d

    def csv_row(self) -> list[str]:
        out = []
        for k in CSV_COLUMNS:
            v = getattr(self, k)
            if k == "cycle_counts":
                v = ";".join(f"{a}:{b}" for a, b in sorted(v.items()))
            elif isinstance(v, bool):
                v = int(v)
            out.append(str(v))
        return out


def _kind_set(G: Graph):
    return {kind.tag for _, kind in block_kinds(G)}


def is_cycle_clique(G: Graph) -> bool:
    return BlockTag.OTHER not in _kind_set(G)


def is_block_graph(G: Graph) -> bool:
    return _kind_set(G) <= {BlockTag.EDGE, BlockTag.CLIQUE}


def is_cactus(G: Graph) -> bool:
    if not is_connected(G):
        return False
    for _, kind in block_kinds(G):
        if kind.tag is BlockTag.OTHER:
            return False
        if kind.tag is BlockTag.CLIQUE and kind.size != 3:
            return False
    return True


def invariant_report(G: Graph) -> InvariantReport:
    """All invariants feeding the bounds.

    Raises BlockKindUnsupported when some block is not an edge, clique or
    cycle.  Isolated vertices are ignored by every count.
    """
    tree = block_cut_tree(G)
    kinds = block_kinds(G, tree)
    for b, kind in kinds:
        if kind.tag is BlockTag.OTHER:
            raise BlockKindUnsupported(b)

    cliques = [q for q in maximal_cliques(G) if len(q) >= 2]
    cycle_counts: dict[int, int] = {}
    cycle_edges = set()
    for b, kind in kinds:
        if kind.tag is BlockTag.CYCLE:
            cycle_counts[kind.size] = cycle_counts.get(kind.size, 0) + 1
            cycle_edges.update(e for e in combinations(b, 2) if G.has_edge(*e))
    c = len(cliques)
    c_prime = sum(1 for q in cliques if not (len(q) == 2 and q in cycle_edges))
    big_c = sum(cycle_counts.values())
    paper_bound = c_prime + sum((k - 2) * m for k, m in cycle_counts.items())
    tags = {kind.tag for _, kind in kinds}
    connected = is_connected(G)
    return InvariantReport(
        n=G.n,
        block_count=len(tree.blocks),
        c=c,
        c_prime=c_prime,
        cycle_counts=dict(sorted(cycle_counts.items())),
        big_c=big_c,
        paper_bound=paper_bound,
        smk_bound=c,
        is_block_graph=tags <= {BlockTag.EDGE, BlockTag.CLIQUE},
        is_cactus=connected and all(k.tag is not BlockTag.CLIQUE or k.size == 3 for _, k in kinds),
        is_cycle_clique=True,
        is_indecomposable=is_indecomposable(G),
    )


def paper_bound(G: Graph) -> int:
    return invariant_report(G).paper_bound


def block_graph_of(G: Graph) -> tuple[Graph, tuple[VertexSet, ...]]:
    """B(G): one vertex per block, adjacent when the blocks share a cut vertex.

    Vertex i of the result is ``blocks[i-1]`` of the returned tuple.
    """
    if not is_connected(G):
        raise GraphError("block graph requires a connected graph")
    tree = block_cut_tree(G)
    if not tree.blocks:
        return Graph(1 if G.n else 0, frozenset()), ()
    edges = set()
    for v, idx in tree.incidence.items():
        for a, b in combinations(idx, 2):
            edges.add((a + 1, b + 1))
    B = Graph.from_edges(len(tree.blocks), edges)
    if not is_block_graph(B):
        raise AssertionError("block graph of a connected graph must be a block graph")
    return B, tree.blocks


@dataclass(frozen=True)
class PeripheralCycle:
    cycle: tuple[int, ...]
    run: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.cycle)


def _cycle_order(G: Graph, block: VertexSet, start: int) -> list[int]:
    members = set(block)
    order = [start]
    prev, cur = None, start
    cur_nbrs = sorted(G.adjacency[start] & members)
    nxt = cur_nbrs[0]
    while nxt != start:
        order.append(nxt)
        prev, cur = cur, nxt
        nxt = next(w for w in sorted(G.adjacency[cur] & members) if w != prev)
    return order


def find_peripheral_cycle(G: Graph) -> PeripheralCycle:
    """A cycle block C of length r >= 4 together with r-2 consecutive vertices
    of C lying on no other cycle block of length >= 4.

    Leaf cliques of the block graph are peeled off until a leaf group
    contains a non-clique block, which is returned.  Ties go to the
    smallest vertex label.
    """
    kinds = block_kinds(G)
    if any(k.tag is BlockTag.OTHER for _, k in kinds):
        raise BlockKindUnsupported(next(b for b, k in kinds if k.tag is BlockTag.OTHER))
    big = [b for b, k in kinds if k.is_big_cycle]
    if not big:
        raise NoBigCycle("graph has no cycle block of length >= 4")

    original_cuts = block_cut_tree(G).cut_vertices
    current = set(next(c for c in connected_components(G) if any(set(b) <= set(c) for b in big)))
    while True:
        tree = block_cut_tree(G, current)
        if len(tree.blocks) == 1:
            block = tree.blocks[0]
            return _with_run(G, block, min(block), original_cuts)
        free = _leaf_groups(tree)[0]
        cliques = [(b, v) for b, v in free if G.is_clique(b)]
        if not cliques:
            b, v = min(free)
            return _with_run(G, b, v, original_cuts)
        b, v = min(cliques, key=lambda t: min(set(t[0]) - {t[1]}))
        current -= set(b) - {v}


def _leaf_groups(tree) -> list[list[tuple[VertexSet, int]]]:
    """For each leaf clique of B(G): the member blocks that touch the rest of
    the graph only through the shared vertex, paired with that vertex.

    A maximal clique of B(G) is the set of blocks around one cut vertex v;
    it is a leaf when at most one of those blocks has another cut vertex.
    Groups are ordered by the smallest label among their free vertices.
    """
    groups = []
    for v in sorted(tree.cut_vertices):
        members = tree.blocks_at(v)
        attached = [b for b in members if any(u != v and u in tree.cut_vertices for u in b)]
        if len(attached) > 1:
            continue
        free = [(b, v) for b in members if b not in attached]
        groups.append(free)
    groups.sort(key=lambda free: min(min(set(b) - {v}) for b, v in free))
    return groups


def _with_run(G: Graph, block: VertexSet, anchor: int, avoid: frozenset[int]) -> PeripheralCycle:
    order = _cycle_order(G, block, anchor)
    r = len(order)
    rest = order[1:]
    options = [tuple(rest[:r - 2]), tuple(rest[1:])]
    run = min(options, key=lambda run: (sum(1 for u in run if u in avoid), run))
    return PeripheralCycle(tuple(order), run)


def verify_peripheral_cycle(G: Graph, found: PeripheralCycle) -> list[str]:
    """Independent audit of a (cycle, run) pair; returns the problems found."""
    problems = []
    kinds = block_kinds(G)
    big = [set(b) for b, k in kinds if k.is_big_cycle]
    cyc = set(found.cycle)
    r = len(found.cycle)
    if cyc not in big:
        problems.append("cycle is not a cycle block of length >= 4")
    if len(found.run) != r - 2:
        problems.append(f"run has {len(found.run)} vertices, expected {r - 2}")
    if len(set(found.run)) != len(found.run) or not set(found.run) <= cyc:
        problems.append("run is not a set of cycle vertices")
    for a, b in zip(found.run, found.run[1:]):
        if not G.has_edge(a, b):
            problems.append(f"run vertices {a},{b} are not consecutive")
    for u in found.run:
        others = [b for b in big if u in b and b != cyc]
        if others:
            problems.append(f"run vertex {u} lies on another big cycle")
    return problems
