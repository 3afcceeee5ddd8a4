"""Chains of blocks, the Cohen-Macaulay cactus conditions, and the graph
families whose regularity is known in closed form."""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations, product
from typing import NamedTuple, Sequence

from .bounds import block_graph_of, invariant_report, is_cactus
from .errors import ClassMismatch, GraphError, NotAChain
from .graph import (
    BlockKind,
    BlockTag,
    Graph,
    VertexSet,
    block_cut_tree,
    clique_sum,
    complete,
    cycle,
    is_connected,
    is_indecomposable,
    kind_of_vertex_set,
)

# --- building chains -------------------------------------------------------

_TOKEN = re.compile(r"^([KC])(\d+)(?:/(\d+))?$")


def parse_chain(tokens: str | Sequence[str]) -> list[tuple[str, int, int]]:
    """``"K2,C4,C3/1,K3"`` -> [(kind, size, exit distance)].

    ``Ck/d`` leaves the cycle at the vertex d steps from where it was
    entered; the default d = 1 puts the two cut points next to each other.
    """
    if isinstance(tokens, str):
        tokens = [t for t in tokens.split(",") if t.strip()]
    out = []
    for tok in tokens:
        m = _TOKEN.match(tok.strip())
        if not m:
            raise GraphError(f"bad chain block {tok!r}")
        kind, size = m.group(1), int(m.group(2))
        dist = int(m.group(3)) if m.group(3) else 1
        if kind == "K" and (size < 2 or m.group(3)):
            raise GraphError(f"bad clique block {tok!r}")
        if kind == "C" and (size < 3 or not 1 <= dist <= size // 2):
            raise GraphError(f"bad cycle block {tok!r}")
        out.append((kind, size, dist))
    if not out:
        raise GraphError("empty chain")
    return out


def chain_graph(tokens: str | Sequence[str]) -> Graph:
    """Glue blocks end to end, each at the exit vertex of its predecessor.

    Labels run along the chain: a clique's new vertices are appended with
    the last one as exit; a cycle is walked from its entry vertex.
    """
    G = None
    exit_vertex = None
    for kind, size, dist in parse_chain(tokens):
        block = complete(size) if kind == "K" else cycle(size)
        # entry is vertex 1 of the block; exit is the vertex `dist` steps back
        block_exit = size if kind == "K" else size - dist + 1
        if G is None:
            G, relabel = block, {v: v for v in block.vertices}
        else:
            G, relabel = clique_sum(G, block, [exit_vertex], [1])
        exit_vertex = relabel[block_exit]
    return G


def paper_example_graphs() -> tuple[Graph, Graph]:
    """The two Cohen-Macaulay cactus graphs drawn in the figure:
    K2-C4-C3-C4-K2 on 11 vertices and K2-C4-C4-K2 on 9 vertices."""
    return chain_graph("K2,C4,C3,C4,K2"), chain_graph("K2,C4,C4,K2")


# --- families --------------------------------------------------------------

def lemma41_family(k: int, m1: int, m2: int) -> Graph:
    """C_k with K_{m1} glued along the cycle edge {1,2} and K_{m2} at vertex 1."""
    if k < 3 or m1 < 3 or m2 < 2:
        raise GraphError("need k >= 3, m1 >= 3, m2 >= 2")
    G, _ = clique_sum(cycle(k), complete(m1), [1, 2], [1, 2])
    G, _ = clique_sum(G, complete(m2), [1], [1])
    return G


def lemma41_reg(k: int, m1: int, m2: int) -> int:
    if k < 3 or m1 < 3 or m2 < 2:
        raise GraphError("need k >= 3, m1 >= 3, m2 >= 2")
    return k - 1 if m2 == 2 else k


def lemma42_family(k: int, m1: int, m2: int) -> Graph:
    """C_k with K_{m1} hanging at vertex 1 and K_{m2} at vertex 2."""
    if k < 4 or m1 < 2 or m2 < 2:
        raise GraphError("need k >= 4, m1 >= 2, m2 >= 2")
    G, _ = clique_sum(cycle(k), complete(m1), [1], [1])
    G, _ = clique_sum(G, complete(m2), [2], [1])
    return G


def lemma42_reg(k: int, m1: int, m2: int) -> int:
    if k < 4 or m1 < 2 or m2 < 2:
        raise GraphError("need k >= 4, m1 >= 2, m2 >= 2")
    return k - 1 if m1 == m2 == 2 else k


def recognize_lemma42(G: Graph) -> tuple[int, int, int] | None:
    """(k, m1, m2) when G is isomorphic to a lemma42_family member."""
    if not is_connected(G):
        return None
    tree = block_cut_tree(G)
    if len(tree.blocks) != 3:
        return None
    kinds = [kind_of_vertex_set(G, b) for b in tree.blocks]
    cycles = [i for i, k in enumerate(kinds) if k.is_big_cycle]
    if len(cycles) != 1 or not all(k.is_clique for i, k in enumerate(kinds) if i != cycles[0]):
        return None
    cyc = tree.blocks[cycles[0]]
    others = [tree.blocks[i] for i in range(3) if i != cycles[0]]
    at = []
    for b in others:
        shared = set(b) & set(cyc)
        if len(shared) != 1:
            return None
        at.append(shared.pop())
    if at[0] == at[1] or not G.has_edge(*at):
        return None
    sizes = sorted(len(b) for b in others)
    return len(cyc), sizes[0], sizes[1]


def recognize_lemma41(G: Graph) -> tuple[int, int, int] | None:
    """(k, m1, m2) when G is isomorphic to a lemma41_family member."""
    if not is_connected(G):
        return None
    tree = block_cut_tree(G)
    if len(tree.blocks) != 2 or len(tree.cut_vertices) != 1:
        return None
    (v,) = tree.cut_vertices
    for body, tail in (tree.blocks, tree.blocks[::-1]):
        if not G.is_clique(tail):
            continue
        found = _cycle_plus_clique(G, body, v)
        if found is not None:
            k, m1 = found
            return k, m1, len(tail)
    return None


def _cycle_plus_clique(G: Graph, body: VertexSet, v: int) -> tuple[int, int] | None:
    members = set(body)
    for q_size in range(len(body) - 1, 2, -1):
        for clique in _cliques_containing(G, members, v, q_size):
            rest = members - clique
            if not rest:
                continue
            if any(len(G.adjacency[r] & members) != 2 for r in rest):
                continue
            ends = [u for u in clique if G.adjacency[u] & rest]
            if len(ends) != 2 or v not in ends:
                continue
            if any(len(G.adjacency[u] & rest) != 1 for u in ends):
                continue
            # the rest must be a single path between the two ends
            start = next(iter(G.adjacency[ends[0]] & rest))
            seen, cur, prev = {start}, start, ends[0]
            while True:
                nxt = [w for w in G.adjacency[cur] & members if w != prev]
                if len(nxt) != 1:
                    break
                prev, cur = cur, nxt[0]
                if cur in clique:
                    break
                seen.add(cur)
            if cur == ends[1] and seen == rest:
                return len(rest) + 2, len(clique)
    return None


def _cliques_containing(G: Graph, members: set[int], v: int, size: int):
    pool = sorted(G.adjacency[v] & members)
    for combo in combinations(pool, size - 1):
        if G.is_clique(combo):
            yield set(combo) | {v}


# --- chains ----------------------------------------------------------------

@dataclass(frozen=True)
class ChainStructure:
    blocks: tuple[VertexSet, ...]
    kinds: tuple[BlockKind, ...]
    cut_vertices: tuple[int, ...]
    cut_points: tuple[tuple[int, ...], ...]
    c4_cut_adjacent: dict[int, bool]

    @property
    def length(self) -> int:
        return len(self.blocks)

    def labels(self) -> list[str]:
        return [str(k) for k in self.kinds]

    def to_dict(self) -> dict:
        return {
            "blocks": [list(b) for b in self.blocks],
            "kinds": self.labels(),
            "cut_vertices": list(self.cut_vertices),
            "c4_cut_adjacent": {str(i + 1): v for i, v in sorted(self.c4_cut_adjacent.items())},
        }


def chain_structure(G: Graph) -> ChainStructure:
    if not is_connected(G) or G.num_edges() == 0:
        raise NotAChain("a chain needs a connected graph with at least one edge")
    B, blocks = block_graph_of(G)
    l = len(blocks)
    if l > 1 and (B.num_edges() != l - 1 or any(B.degree(v) > 2 for v in B.vertices)):
        raise NotAChain("block graph is not a path")
    if l == 1:
        order = [1]
    else:
        start = min(v for v in B.vertices if B.degree(v) == 1)
        order, prev = [start], None
        while len(order) < l:
            cur = order[-1]
            nxt = [w for w in B.neighbors(cur) if w != prev]
            prev = cur
            order.append(nxt[0])
        # read the chain from the end whose kind sequence is smaller
        # (cliques before cycles, then by size); vertex labels break ties
        def key(o):
            kinds = [kind_of_vertex_set(G, blocks[i - 1]) for i in o]
            return [(0 if k.is_clique else 1, k.size) for k in kinds], [blocks[i - 1] for i in o]

        order = min(order, order[::-1], key=key)
    ordered = tuple(blocks[i - 1] for i in order)
    kinds = tuple(kind_of_vertex_set(G, b) for b in ordered)
    cuts = tuple((set(a) & set(b)).pop() for a, b in zip(ordered, ordered[1:]))
    cut_set = set(cuts)
    cut_points = tuple(tuple(v for v in b if v in cut_set) for b in ordered)
    adjacent = {
        i: len(cp) == 2 and G.has_edge(*cp)
        for i, (cp, kind) in enumerate(zip(cut_points, kinds))
        if kind == BlockKind(BlockTag.CYCLE, 4)
    }
    return ChainStructure(ordered, kinds, cuts, cut_points, adjacent)


class CMCheck(NamedTuple):
    holds: bool
    violated: str | None = None


_C4 = BlockKind(BlockTag.CYCLE, 4)


def _is_k2_or_c3(kind: BlockKind) -> bool:
    return kind.is_clique and kind.size in (2, 3)


def is_cm_cactus_indecomposable(G: Graph) -> CMCheck:
    """Check the four-condition list describing indecomposable Cohen-Macaulay
    cactus graphs; ``violated`` names the first failing condition."""
    if not is_connected(G) or not is_cactus(G):
        raise GraphError("expected a connected cactus graph")
    if not is_indecomposable(G):
        return CMCheck(False, "decomposable")
    try:
        ch = chain_structure(G)
    except NotAChain:
        return CMCheck(False, "not a chain")
    ks = ch.kinds
    if ch.length == 1 and _is_k2_or_c3(ks[0]):
        return CMCheck(True)
    if not (_is_k2_or_c3(ks[0]) and _is_k2_or_c3(ks[-1])):
        return CMCheck(False, "condition 1: end blocks must be K2 or C3")
    if ch.length < 3 or ks[1] != _C4 or ks[-2] != _C4:
        return CMCheck(False, "condition 2: second and penultimate blocks must be C4")
    for i in range(2, ch.length - 2):
        if not (ks[i] == _C4 or (ks[i].is_clique and ks[i].size == 3)):
            return CMCheck(False, f"condition 3: block {i + 1} is {ks[i]}")
        if ks[i].size == 3 and ks[i + 1] != _C4:
            return CMCheck(False, f"condition 3: block {i + 1} is C3 but block {i + 2} is not C4")
    for i, kind in enumerate(ks):
        if kind == _C4 and not ch.c4_cut_adjacent[i]:
            return CMCheck(False, f"condition 4: C4 block {i + 1} lacks two adjacent cut points")
    return CMCheck(True)


class Theorem44Check(NamedTuple):
    holds: bool
    violated: str | None = None
    indecomposable: bool | None = None


def theorem44_check(G: Graph) -> Theorem44Check:
    if not is_connected(G):
        return Theorem44Check(False, "disconnected")
    try:
        ch = chain_structure(G)
    except NotAChain:
        return Theorem44Check(False, "not a chain")
    ks = list(ch.kinds)
    if len(ks) < 3:
        return Theorem44Check(False, "fewer than three blocks")
    # the end conditions are asymmetric (m1 >= 2, ml >= 3); try both directions
    if not (ks[-1].is_clique and ks[-1].size >= 3):
        ks.reverse()
    if not (ks[0].is_clique and ks[-1].is_clique and ks[-1].size >= 3):
        return Theorem44Check(False, "end blocks must be K_m1 (m1 >= 2) and K_ml (ml >= 3)")
    if ks[1] != _C4 or ks[-2] != _C4:
        return Theorem44Check(False, "second and penultimate blocks must be C4")
    for kind in ks[2:-2]:
        if not (kind == _C4 or (kind.is_clique and kind.size >= 3)):
            return Theorem44Check(False, f"inner block {kind} is neither C4 nor K_m, m >= 3")
    if not all(ch.c4_cut_adjacent.values()):
        return Theorem44Check(False, "some C4 lacks exactly two adjacent cut points")
    return Theorem44Check(True, None, is_indecomposable(G))


def matches_theorem44_class(G: Graph) -> bool:
    return theorem44_check(G).holds


def exact_reg_theorem44(G: Graph) -> int:
    """2 * (number of C4 blocks) + (maximal cliques other than C4 edges)."""
    check = theorem44_check(G)
    if not check.holds:
        raise ClassMismatch(check.violated)
    rep = invariant_report(G)
    return 2 * rep.cycle_counts.get(4, 0) + rep.c_prime


def corollary45_applies(G: Graph) -> bool:
    if not is_connected(G) or not is_cactus(G):
        return False
    if not is_cm_cactus_indecomposable(G).holds:
        return False
    ks = chain_structure(G).kinds
    triangle = BlockKind(BlockTag.CLIQUE, 3)
    return ks[0] == triangle or ks[-1] == triangle


def theorem44_members(max_vertices: int, max_blocks: int = 8) -> list[str]:
    """Chain specs (for chain_graph) of every class member with at most
    ``max_vertices`` vertices, one per isomorphism class."""
    inner_opts = ["C4"] + [f"K{m}" for m in range(3, max_vertices)]
    out = set()
    for l in range(3, max_blocks + 1):
        if l == 3:
            middles = [("C4",)]
        else:
            middles = [("C4", *inner, "C4") for inner in product(inner_opts, repeat=l - 4)]
        for mid in middles:
            added = sum(int(tok[1:]) - 1 for tok in mid)
            for m1 in range(2, max_vertices + 1):
                for ml in range(3, max_vertices + 1):
                    if m1 + added + ml - 1 > max_vertices:
                        continue
                    seq = [f"K{m1}", *mid, f"K{ml}"]
                    # the reversed chain is the same graph; it qualifies when m1 >= 3
                    if m1 >= 3:
                        seq = min(seq, seq[::-1], key=",".join)
                    out.add(",".join(seq))
    return sorted(out, key=lambda s: (chain_graph(s).n, s))
