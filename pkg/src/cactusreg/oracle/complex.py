"""Stanley-Reisner complexes and reduced homology of induced subcomplexes."""

from __future__ import annotations

from dataclasses import dataclass

from .ideal import SquarefreeMonomialIdeal
from .linalg import DEFAULT_FIELD, FieldSpec, rank


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on vertices 0..num_vertices-1 given by its minimal nonfaces.

    A set of vertices (bitmask) is a face iff it contains no minimal
    nonface.  If the empty set is a nonface the complex is void.
    """

    num_vertices: int
    minimal_nonfaces: tuple[int, ...]
    names: tuple[str, ...] | None = None

    @property
    def is_void(self) -> bool:
        return 0 in self.minimal_nonfaces

    def is_face(self, mask: int) -> bool:
        return not any(g & mask == g for g in self.minimal_nonfaces)

    def nonfaces_within(self, W: int) -> list[int]:
        return [g for g in self.minimal_nonfaces if g & W == g]

    def faces_within(self, W: int) -> dict[int, list[int]]:
        """Faces of the induced subcomplex on W, keyed by size."""
        if self.is_void:
            return {}
        gens = self.nonfaces_within(W)
        verts = [1 << i for i in range(self.num_vertices) if W >> i & 1]
        by_size: dict[int, list[int]] = {0: [0]}

        def grow(start: int, mask: int, size: int) -> None:
            for j in range(start, len(verts)):
                m = mask | verts[j]
                if any(g & m == g for g in gens):
                    continue
                by_size.setdefault(size + 1, []).append(m)
                grow(j + 1, m, size + 1)

        grow(0, 0, 0)
        return by_size

    def dimension(self, W: int | None = None) -> int:
        W = (1 << self.num_vertices) - 1 if W is None else W
        faces = self.faces_within(W)
        return max(faces) - 1 if faces else -2


def stanley_reisner(ideal: SquarefreeMonomialIdeal) -> SimplicialComplex:
    if not isinstance(ideal, SquarefreeMonomialIdeal):
        raise TypeError("expected a SquarefreeMonomialIdeal")
    return SimplicialComplex(ideal.num_vars, ideal.generators, ideal.names)


def boundary_rows(upper: list[int], lower: list[int]) -> list[dict[int, int]]:
    """Rows of the boundary map from the faces in ``upper`` (size s) to the
    faces in ``lower`` (size s-1), with the usual alternating signs."""
    index = {f: i for i, f in enumerate(lower)}
    rows = []
    for f in upper:
        row = {}
        sign = 1
        rest = f
        while rest:
            bit = rest & -rest
            rest ^= bit
            row[index[f ^ bit]] = sign
            sign = -sign
        rows.append(row)
    return rows


def homology_from_faces(
    by_size: dict[int, list[int]],
    field: FieldSpec = DEFAULT_FIELD,
    min_dim: int = -1,
) -> dict[int, int]:
    """Reduced Betti numbers ``{d: rank H~_d}`` for d >= min_dim.

    The rank of H~_d is f_{d+1} - rank(boundary of (d+1)-sets) -
    rank(boundary of (d+2)-sets), where f_s counts faces of size s.
    """
    if not by_size:
        return {}
    top = max(by_size)
    ranks: dict[int, int] = {}

    def boundary_rank(s: int) -> int:
        if s not in ranks:
            if s < 1 or s > top:
                ranks[s] = 0
            else:
                ranks[s] = rank(boundary_rows(by_size[s], by_size[s - 1]), field)
        return ranks[s]

    out = {}
    for s in range(top, max(min_dim + 1, 0) - 1, -1):
        out[s - 1] = len(by_size[s]) - boundary_rank(s) - boundary_rank(s + 1)
    return dict(sorted(out.items()))


def reduced_homology_ranks(
    complex: SimplicialComplex,
    W: int | None = None,
    field: FieldSpec = DEFAULT_FIELD,
) -> dict[int, int]:
    """``{d: rank}`` for -1 <= d <= dim of the subcomplex induced on W.

    The irrelevant complex {empty set} has rank 1 in degree -1; the void
    complex has no homology at all and yields ``{}``.
    """
    W = (1 << complex.num_vertices) - 1 if W is None else W
    if W >> complex.num_vertices:
        raise ValueError("W reaches outside the ground set")
    return homology_from_faces(complex.faces_within(W), field)
