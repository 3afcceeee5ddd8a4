"""Finite simple graphs on dense labels 1..n and the block-level machinery
(cut vertices, blocks, clique sums, simplicial splitting) built on them."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

from .errors import GraphError

Edge = tuple[int, int]
VertexSet = tuple[int, ...]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph with vertices 1..n."""

    n: int
    edges: frozenset[Edge]
    adjacency: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        adj: list[set[int]] = [set() for _ in range(self.n + 1)]
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (1 <= u < v <= self.n):
                raise GraphError(f"edge {e} is not a normalized pair inside 1..{self.n}")
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "adjacency", tuple(frozenset(a) for a in adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        norm = set()
        for e in edges:
            u, v = e
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            norm.add(_norm(int(u), int(v)))
        return cls(n, frozenset(norm))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def num_edges(self) -> int:
        return len(self.edges)

    def _check(self, v: int) -> None:
        if not (isinstance(v, int) and 1 <= v <= self.n):
            raise GraphError(f"unknown vertex {v!r}")

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(a, b) for a, b in combinations(vs, 2))

    def __str__(self):
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


# --- builders --------------------------------------------------------------

def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(1, n + 1), 2))


def diamond() -> Graph:
    return Graph.from_edges(4, list(cycle(4).edges) + [(1, 3)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with centre 1."""
    if leaves < 1:
        raise GraphError("star needs at least one leaf")
    return Graph.from_edges(leaves + 1, [(1, i) for i in range(2, leaves + 2)])


def empty(n: int) -> Graph:
    return Graph(n, frozenset())


# --- vertex-local operations ----------------------------------------------

def induced_subgraph(G: Graph, A: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """G[A] relabeled to 1..|A| in increasing label order, with the old->new map."""
    verts = sorted(set(A))
    for v in verts:
        G._check(v)
    relabel = {v: i for i, v in enumerate(verts, start=1)}
    edges = [(relabel[u], relabel[v]) for u, v in G.edges if u in relabel and v in relabel]
    return Graph.from_edges(len(verts), edges), relabel


def delete_vertex(G: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    G._check(v)
    return induced_subgraph(G, (u for u in G.vertices if u != v))


def neighborhood_complete(G: Graph, v: int) -> Graph:
    """G_v: the graph with N(v) turned into a clique."""
    nbrs = sorted(G.neighbors(v))
    return Graph.from_edges(G.n, list(G.edges) + list(combinations(nbrs, 2)))


def is_simplicial(G: Graph, v: int) -> bool:
    return G.is_clique(G.neighbors(v))


def is_internal(G: Graph, v: int) -> bool:
    return not is_simplicial(G, v)


def clique_sum(G1: Graph, G2: Graph, glue1: Sequence[int], glue2: Sequence[int]) -> tuple[Graph, dict[int, int]]:
    """Glue ``glue2[i]`` of G2 onto ``glue1[i]`` of G1.

    G1 keeps its labels; the remaining vertices of G2 are appended in
    increasing order. Returns the sum and the G2 -> result relabeling.
    """
    glue1, glue2 = list(glue1), list(glue2)
    if len(glue1) != len(glue2):
        raise GraphError("glue sets differ in size")
    if len(set(glue1)) != len(glue1) or len(set(glue2)) != len(glue2):
        raise GraphError("glue sets repeat a vertex")
    for v in glue1:
        G1._check(v)
    for v in glue2:
        G2._check(v)
    if not G1.is_clique(glue1) or not G2.is_clique(glue2):
        raise GraphError("glue sets must induce complete subgraphs")
    relabel = dict(zip(glue2, glue1))
    nxt = G1.n
    for v in G2.vertices:
        if v not in relabel:
            nxt += 1
            relabel[v] = nxt
    edges = list(G1.edges) + [(relabel[u], relabel[v]) for u, v in G2.edges]
    return Graph.from_edges(nxt, edges), relabel


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for H in graphs:
        edges += [(u + offset, v + offset) for u, v in H.edges]
        offset += H.n
    return Graph.from_edges(offset, edges)


def relabel(G: Graph, perm: dict[int, int]) -> Graph:
    """Apply a bijection of 1..n to the labels."""
    if sorted(perm) != list(G.vertices) or sorted(perm.values()) != list(G.vertices):
        raise GraphError("relabeling must be a permutation of the vertices")
    return Graph.from_edges(G.n, [(perm[u], perm[v]) for u, v in G.edges])


def connected_components(G: Graph, within: Iterable[int] | None = None) -> list[VertexSet]:
    allowed = set(G.vertices if within is None else within)
    seen: set[int] = set()
    comps = []
    for s in sorted(allowed):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in G.adjacency[u]:
                if w in allowed and w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected(G: Graph) -> bool:
    return G.n <= 1 or len(connected_components(G)) == 1


# --- blocks ---------------------------------------------------------------

@dataclass(frozen=True)
class BlockCutTree:
    """Blocks (as sorted vertex tuples) and cut vertices of a graph.

    Only blocks carrying at least one edge are listed; isolated vertices
    have no block.
    """

    blocks: tuple[VertexSet, ...]
    cut_vertices: frozenset[int]
    incidence: dict[int, tuple[int, ...]]

    def blocks_at(self, v: int) -> list[VertexSet]:
        return [self.blocks[i] for i in self.incidence.get(v, ())]

    def cut_points_of(self, block: VertexSet) -> tuple[int, ...]:
        return tuple(v for v in block if v in self.cut_vertices)

    def tree_edges(self) -> list[tuple[int, int]]:
        """Edges (cut vertex, block index) of the incidence tree."""
        return [(v, b) for v in sorted(self.incidence) for b in self.incidence[v]]


def _blocks_within(G: Graph, allowed: set[int]) -> list[VertexSet]:
    """Biconnected components of G[allowed] via Hopcroft-Tarjan, iteratively."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks = []
    t = 0
    for root in sorted(allowed):
        if root in disc:
            continue
        disc[root] = low[root] = t
        t += 1
        edge_stack: list[Edge] = []
        stack = [(root, 0, iter(sorted(w for w in G.adjacency[root] if w in allowed)))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w not in disc:
                    disc[w] = low[w] = t
                    t += 1
                    edge_stack.append((u, w))
                    stack.append((w, u, iter(sorted(x for x in G.adjacency[w] if x in allowed))))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[u])
                if low[u] >= disc[p]:
                    comp: set[int] = set()
                    while True:
                        a, b = edge_stack.pop()
                        comp.update((a, b))
                        if (a, b) == (p, u):
                            break
                    blocks.append(tuple(sorted(comp)))
    return sorted(blocks)


def _tree_from_blocks(blocks: list[VertexSet]) -> BlockCutTree:
    where: dict[int, list[int]] = {}
    for i, b in enumerate(blocks):
        for v in b:
            where.setdefault(v, []).append(i)
    cuts = frozenset(v for v, bs in where.items() if len(bs) >= 2)
    incidence = {v: tuple(where[v]) for v in sorted(cuts)}
    return BlockCutTree(tuple(blocks), cuts, incidence)


def block_cut_tree(G: Graph, within: Iterable[int] | None = None) -> BlockCutTree:
    """Blocks and cut vertices of G, or of the induced subgraph on ``within``
    keeping the original labels."""
    allowed = set(G.vertices if within is None else within)
    return _tree_from_blocks(_blocks_within(G, allowed))


class BlockTag(Enum):
    EDGE = "edge"
    CLIQUE = "clique"
    CYCLE = "cycle"
    OTHER = "other"


class BlockKind(NamedTuple):
    tag: BlockTag
    size: int

    def __str__(self):
        if self.tag in (BlockTag.EDGE, BlockTag.CLIQUE):
            return f"K{self.size}"
        if self.tag is BlockTag.CYCLE:
            return f"C{self.size}"
        return f"other{self.size}"

    @property
    def is_clique(self) -> bool:
        return self.tag in (BlockTag.EDGE, BlockTag.CLIQUE)

    @property
    def is_big_cycle(self) -> bool:
        return self.tag is BlockTag.CYCLE


def kind_of_vertex_set(G: Graph, block: Iterable[int]) -> BlockKind:
    """Shape of G[block] without checking that it is a block."""
    vs = sorted(block)
    m = len(vs)
    if m == 2:
        return BlockKind(BlockTag.EDGE, 2)
    inner = sum(1 for u, v in combinations(vs, 2) if G.has_edge(u, v))
    if inner == m * (m - 1) // 2:
        return BlockKind(BlockTag.CLIQUE, m)
    members = set(vs)
    if m >= 4 and inner == m and all(len(G.adjacency[v] & members) == 2 for v in vs):
        # 2-regular and (being a block) connected, hence a single cycle
        if len(connected_components(G, vs)) == 1:
            return BlockKind(BlockTag.CYCLE, m)
    return BlockKind(BlockTag.OTHER, m)


def classify_block(G: Graph, block: Iterable[int], tree: BlockCutTree | None = None) -> BlockKind:
    key = tuple(sorted(block))
    tree = tree or block_cut_tree(G)
    if key not in tree.blocks:
        raise GraphError(f"{key} is not a block of the graph")
    return kind_of_vertex_set(G, key)


def block_kinds(G: Graph, tree: BlockCutTree | None = None) -> list[tuple[VertexSet, BlockKind]]:
    tree = tree or block_cut_tree(G)
    return [(b, kind_of_vertex_set(G, b)) for b in tree.blocks]


# --- cliques --------------------------------------------------------------

def maximal_cliques(G: Graph) -> list[VertexSet]:
    """All inclusion-maximal cliques, sorted; Bron-Kerbosch with Tomita pivoting.

    Isolated vertices appear as singleton cliques.
    """
    adj = G.adjacency
    out: list[VertexSet] = []

    def expand(R: list[int], P: set[int], X: set[int]) -> None:
        if not P and not X:
            out.append(tuple(sorted(R)))
            return
        pivot = max(P | X, key=lambda u: (len(adj[u] & P), -u))
        for v in sorted(P - adj[pivot]):
            expand(R + [v], P & adj[v], X & adj[v])
            P.discard(v)
            X.add(v)

    expand([], set(G.vertices), set())
    return sorted(out)


# --- decomposition --------------------------------------------------------

def _simplicial_split(G: Graph, part: VertexSet) -> tuple[VertexSet, VertexSet] | None:
    tree = block_cut_tree(G, part)
    members = set(part)
    for v in sorted(tree.cut_vertices):
        comps = connected_components(G, members - {v})
        if len(comps) != 2:
            continue
        if all(G.is_clique(G.adjacency[v] & set(c)) for c in comps):
            return tuple(sorted(comps[0] + (v,))), tuple(sorted(comps[1] + (v,)))
    return None


def simplicial_pieces(G: Graph) -> list[VertexSet]:
    """Vertex sets of the indecomposable pieces, in original labels.

    A split at v is allowed when G - v has exactly two components and v is
    simplicial on both sides; this is the only way v can be simplicial in
    each of two subgraphs meeting in v.
    """
    pending = list(connected_components(G))
    done = []
    while pending:
        part = pending.pop()
        split = _simplicial_split(G, part)
        if split is None:
            done.append(part)
        else:
            pending.extend(split)
    return sorted(done)


def decompose_at_simplicial_cut_vertices(G: Graph) -> list[Graph]:
    return [induced_subgraph(G, piece)[0] for piece in simplicial_pieces(G)]


def is_indecomposable(G: Graph) -> bool:
    return is_connected(G) and len(simplicial_pieces(G)) == 1
