"""Regularity of S/J_G from the squarefree initial ideal via Hochster's formula.

For a Stanley-Reisner ideal I of a complex D on the variable set,

    beta_{i,j}(S/I) = sum over |W| = j of dim H~_{j-i-1}(D|W),

so reg(S/I) is the largest d + 1 such that some induced subcomplex D|W
has H~_d != 0.  The initial ideal of J_G is squarefree, and then
reg(S/J_G) = reg(S/in J_G).

Only a small part of the 2^(2n) subsets W can matter:

* If some vertex of W lies in no minimal nonface inside W, then D|W is a
  cone and acyclic.  So W must be a union of minimal nonfaces.
* If for some vertex v of W the link of v in D|W is a cone, then D|W is
  homotopy equivalent to D|(W - v), which is scanned separately.
* A face of D|W misses at least one vertex of W, so W contributes at most
  |W| - 1.  Subsets are scanned by decreasing size and the scan stops once
  no remaining W can beat the best value found.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ..errors import CapExceeded
from ..graph import Graph
from .complex import SimplicialComplex, homology_from_faces, stanley_reisner
from .ideal import SquarefreeMonomialIdeal, initial_ideal, minimalize
from .linalg import DEFAULT_FIELD, FieldSpec

DEFAULT_VERTEX_CAP = 9
HARD_VERTEX_CEILING = 11


@dataclass
class HochsterResult:
    regularity: int
    witness: int | None
    num_vars: int
    candidates: int = 0
    examined: int = 0
    seconds: float = 0.0
    names: tuple[str, ...] | None = field(default=None, repr=False)

    def witness_names(self) -> list[str]:
        if self.witness is None:
            return []
        names = self.names or tuple(f"z{i}" for i in range(self.num_vars))
        return [names[i] for i in range(self.num_vars) if self.witness >> i & 1]


def union_closure(gens) -> list[int]:
    """Every nonempty union of generators, i.e. the nonzero lcm lattice."""
    lattice = {0}
    for g in gens:
        lattice |= {x | g for x in lattice}
    lattice.discard(0)
    return sorted(lattice)


def link_is_cone(gens_in_w: list[int], W: int, v: int) -> bool:
    """Whether the link of vertex bit ``v`` inside D|W is a cone."""
    blocked = 0
    link_nonfaces = []
    for g in gens_in_w:
        if g & v:
            rest = g ^ v
            if rest & (rest - 1) == 0:
                blocked |= rest
            else:
                link_nonfaces.append(rest)
        else:
            link_nonfaces.append(g)
    U = W & ~v & ~blocked
    if not U:
        return False
    covered = 0
    for g in minimalize(m for m in link_nonfaces if m & U == m):
        covered |= g
    return bool(U & ~covered)


def is_reducible(gens, W: int) -> bool:
    inside = [g for g in gens if g & W == g]
    rest = W
    while rest:
        v = rest & -rest
        rest ^= v
        if link_is_cone(inside, W, v):
            return True
    return False


def candidate_subsets(ideal: SquarefreeMonomialIdeal) -> list[int]:
    """Subsets that survive the cone and link-cone tests, biggest first."""
    gens = ideal.generators
    if any(g & (g - 1) == 0 for g in gens):
        # a variable in the ideal is not a vertex; drop it and its generator
        singles = sum(g for g in gens if g & (g - 1) == 0)
        gens = [g for g in gens if not g & singles]
    subsets = [W for W in union_closure(gens) if not is_reducible(gens, W)]
    subsets.sort(key=lambda W: (-W.bit_count(), W))
    return subsets


def _scan(cx: SimplicialComplex, subsets: list[int], field: FieldSpec, best: int):
    """Best (value, witness, examined) over ``subsets`` given a floor ``best``."""
    witness = None
    examined = 0
    for W in subsets:
        if W.bit_count() - 1 <= best:
            break
        faces = cx.faces_within(W)
        top = max(faces)
        if top <= best:
            continue
        examined += 1
        h = homology_from_faces(faces, field, min_dim=best)
        nonzero = [d for d, r in h.items() if r]
        if nonzero and max(nonzero) + 1 > best:
            best = max(nonzero) + 1
            witness = W
    return best, witness, examined


def _scan_worker(args):
    nvars, gens, subsets, field = args
    return _scan(SimplicialComplex(nvars, gens), subsets, field, 0)


def hochster_regularity(
    ideal: SquarefreeMonomialIdeal,
    field: FieldSpec = DEFAULT_FIELD,
    workers: int = 1,
) -> HochsterResult:
    """reg(S/I) for a squarefree monomial ideal I."""
    start = time.perf_counter()
    if ideal.is_unit:
        raise ValueError("the unit ideal has no regularity")
    if ideal.is_zero:
        return HochsterResult(0, 0, ideal.num_vars, names=ideal.names)
    cx = stanley_reisner(ideal)
    subsets = candidate_subsets(ideal)
    if workers <= 1 or len(subsets) < 2 * workers:
        best, witness, examined = _scan(cx, subsets, field, 0)
    else:
        shares = [subsets[k::workers] for k in range(workers)]
        jobs = [(cx.num_vertices, cx.minimal_nonfaces, s, field) for s in shares]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_worker, jobs))
        best = max(p[0] for p in parts)
        examined = sum(p[2] for p in parts)
        order = {W: i for i, W in enumerate(subsets)}
        hits = [p[1] for p in parts if p[0] == best and p[1] is not None]
        witness = min(hits, key=order.__getitem__) if hits else None
    if witness is None:
        witness = 0  # only beta_{0,0}
    return HochsterResult(
        best, witness, ideal.num_vars, len(subsets), examined,
        time.perf_counter() - start, ideal.names,
    )


def check_cap(G: Graph, vertex_cap: int) -> None:
    if vertex_cap < 1:
        raise ValueError("vertex_cap must be at least 1")
    cap = min(vertex_cap, HARD_VERTEX_CEILING)
    if G.n > cap:
        raise CapExceeded(G.n, cap, "Hochster oracle")


def hochster_result(
    G: Graph,
    field: FieldSpec = DEFAULT_FIELD,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    workers: int = 1,
) -> HochsterResult:
    check_cap(G, vertex_cap)
    return hochster_regularity(initial_ideal(G), field, workers)


def regularity_hochster(
    G: Graph,
    field: FieldSpec = DEFAULT_FIELD,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    workers: int = 1,
) -> int:
    """reg(S/J_G) for a graph with at most ``vertex_cap`` vertices (<= 11)."""
    return hochster_result(G, field, vertex_cap, workers).regularity
