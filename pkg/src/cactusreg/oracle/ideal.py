"""Binomial edge ideals and their squarefree lex initial ideals.

Variables are indexed densely: x_i is bit i-1 and y_i is bit n+i-1, so a
squarefree monomial is an int bitmask over 2n bits.  The monomial order
is lex with x_1 > ... > x_n > y_1 > ... > y_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ..errors import NotSquarefree
from ..graph import Graph


def variable_names(n: int) -> list[str]:
    return [f"x{i}" for i in range(1, n + 1)] + [f"y{i}" for i in range(1, n + 1)]


@dataclass(frozen=True)
class BinomialEdgeIdeal:
    """J_G: one generator x_i*y_j - x_j*y_i per edge {i,j}, i < j."""

    n: int
    generators: tuple[tuple[int, int], ...]

    def __str__(self):
        gens = ", ".join(f"x{i}*y{j} - x{j}*y{i}" for i, j in self.generators)
        return f"<{gens}>"


def binomial_edge_ideal(G: Graph) -> BinomialEdgeIdeal:
    return BinomialEdgeIdeal(G.n, tuple(G.sorted_edges()))


def minimalize(masks: Iterable[int]) -> list[int]:
    """Drop every mask that contains another; result sorted by (size, mask)."""
    out: list[int] = []
    for m in sorted(set(masks), key=lambda m: (m.bit_count(), m)):
        if not any(g & m == g for g in out):
            out.append(m)
    return out


@dataclass(frozen=True)
class SquarefreeMonomialIdeal:
    num_vars: int
    generators: tuple[int, ...]
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        gens = minimalize(self.generators)
        for g in gens:
            if g >> self.num_vars:
                raise ValueError(f"generator {g:b} uses variables beyond {self.num_vars}")
        object.__setattr__(self, "generators", tuple(gens))

    @classmethod
    def from_exponents(cls, num_vars: int, exponents: Iterable[Sequence[int]], names=None):
        gens = []
        for e in exponents:
            if len(e) != num_vars:
                raise ValueError("exponent vector has the wrong length")
            if any(a not in (0, 1) for a in e):
                raise NotSquarefree(f"monomial with exponents {tuple(e)} is not squarefree")
            gens.append(sum(1 << i for i, a in enumerate(e) if a))
        return cls(num_vars, tuple(gens), names)

    @classmethod
    def from_supports(cls, num_vars: int, supports: Iterable[Iterable[int]], names=None):
        return cls(num_vars, tuple(sum(1 << i for i in set(s)) for s in supports), names)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return 0 in self.generators

    def monomial(self, mask: int) -> str:
        names = self.names or tuple(f"z{i}" for i in range(self.num_vars))
        if not mask:
            return "1"
        return "*".join(names[i] for i in range(self.num_vars) if mask >> i & 1)

    def __str__(self):
        return "<" + ", ".join(self.monomial(g) for g in self.generators) + ">"


def admissible_paths(G: Graph) -> list[tuple[int, ...]]:
    """All admissible paths i = p_0, ..., p_r = j with i < j.

    Such a path is induced (no chords, which is the same as no proper
    subset of its inner vertices forming an i-j path) and every inner
    vertex lies outside the interval [i, j].
    """
    adj = G.adjacency
    out = []

    def grow(walk: list[int], on_walk: set[int]) -> None:
        tail = walk[-1]
        i = walk[0]
        for w in sorted(adj[tail]):
            if w in on_walk or any(w in adj[u] for u in walk[:-1]):
                continue
            if w > i and all(t < i or t > w for t in walk[1:]):
                out.append(tuple(walk) + (w,))
            walk.append(w)
            on_walk.add(w)
            grow(walk, on_walk)
            walk.pop()
            on_walk.discard(w)

    for i in G.vertices:
        grow([i], {i})
    return sorted(out, key=lambda p: (p[0], p[-1], len(p), p))


def path_monomial(n: int, walk: Sequence[int]) -> int:
    """Lex-leading term of the path binomial: x_i y_j times x_t for inner
    t > j and y_t for inner t < i."""
    i, j = walk[0], walk[-1]
    mask = (1 << (i - 1)) | (1 << (n + j - 1))
    for t in walk[1:-1]:
        mask |= 1 << (t - 1) if t > j else 1 << (n + t - 1)
    return mask


def initial_ideal(G: Graph) -> SquarefreeMonomialIdeal:
    gens = [path_monomial(G.n, p) for p in admissible_paths(G)]
    return SquarefreeMonomialIdeal(2 * G.n, tuple(gens), tuple(variable_names(G.n)))
