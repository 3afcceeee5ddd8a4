"""reg(S/J_G) by splitting G into pieces and answering each piece.

Regularity adds over connected components and over the two sides of a
clique sum along a vertex that is simplicial on both sides.  Each
indecomposable piece is answered by a closed formula when it belongs to a
recognized class, otherwise by the Hochster oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..cm_cactus import (
    exact_reg_theorem44,
    lemma41_reg,
    lemma42_reg,
    matches_theorem44_class,
    recognize_lemma41,
    recognize_lemma42,
)
from ..graph import Graph, connected_components, induced_subgraph, simplicial_pieces
from .hochster import DEFAULT_VERTEX_CAP, regularity_hochster
from .linalg import DEFAULT_FIELD, FieldSpec

FORMULA_METHODS = ("empty", "complete", "path", "theorem44", "lemma41", "lemma42")


@dataclass(frozen=True)
class PieceResult:
    vertices: tuple[int, ...]
    value: int
    method: str


@dataclass(frozen=True)
class RegularityResult:
    value: int
    pieces: tuple[PieceResult, ...]

    @property
    def method(self) -> str:
        """"formula" if no piece needed the oracle, else "hochster"."""
        if any(p.method == "hochster" for p in self.pieces):
            return "hochster"
        return "formula"

    @property
    def methods(self) -> list[str]:
        return sorted({p.method for p in self.pieces})

    def to_dict(self) -> dict:
        return {
            "regularity": self.value,
            "method": self.method,
            "pieces": [
                {"vertices": list(p.vertices), "value": p.value, "method": p.method}
                for p in self.pieces
            ],
        }


def _is_path(G: Graph) -> bool:
    degs = sorted(G.degree(v) for v in G.vertices)
    return G.num_edges() == G.n - 1 and G.n >= 2 and degs[-1] <= 2 and degs.count(1) == 2


def formula_value(G: Graph) -> tuple[int, str] | None:
    """(value, method) when G is connected and in a recognized class."""
    if G.num_edges() == 0:
        return (0, "empty") if G.n <= 1 else None
    if G.num_edges() == G.n * (G.n - 1) // 2:
        return 1, "complete"
    if _is_path(G):
        return G.n - 1, "path"
    if matches_theorem44_class(G):
        return exact_reg_theorem44(G), "theorem44"
    params = recognize_lemma41(G)
    if params:
        return lemma41_reg(*params), "lemma41"
    params = recognize_lemma42(G)
    if params:
        return lemma42_reg(*params), "lemma42"
    return None


def regularity(
    G: Graph,
    field: FieldSpec = DEFAULT_FIELD,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    workers: int = 1,
    use_formulas: bool = True,
) -> RegularityResult:
    """reg(S/J_G), summed over components and simplicial pieces.

    A component in a recognized class is answered whole; otherwise it is
    split at simplicial cut vertices and each piece is answered on its own.

    With ``use_formulas=False`` every piece with an edge goes to the
    oracle; CapExceeded propagates from any piece that is too large.
    """
    pieces = []
    for comp in connected_components(G):
        C, to_c = induced_subgraph(G, comp)
        whole = formula_value(C) if use_formulas else None
        if whole is not None:
            pieces.append(PieceResult(tuple(comp), *whole))
            continue
        back = {c: v for v, c in to_c.items()}
        for part in simplicial_pieces(C):
            H, _ = induced_subgraph(C, part)
            found = formula_value(H) if use_formulas else None
            if found is None and H.num_edges() == 0:
                found = (0, "empty")
            if found is None:
                found = (regularity_hochster(H, field, vertex_cap, workers), "hochster")
            pieces.append(PieceResult(tuple(back[v] for v in part), *found))
    return RegularityResult(sum(p.value for p in pieces), tuple(pieces))
