"""Graded Betti numbers of S/J_G from the Koszul complex, for tiny graphs.

Tor_i(R, K) with R = S/J_G is the homology of the Koszul complex on all
2n variables with coefficients in R.  J_G is homogeneous for the fine
grading deg x_v = deg y_v = e_v together with the x-degree, so the complex
splits into finite strands.  Each graded piece R_d is presented by linear
algebra alone: the span of J_G in degree d is put in reduced row echelon
form and its non-pivot monomials give a basis of R_d.  Nothing here uses
the Gröbner description of J_G, which is what makes it an independent
check on the Hochster oracle.

Nonzero Betti numbers of S/J_G live in vertex degrees a <= (2, ..., 2).
The scan can be widened with ``max_vertex_degree`` to test that claim.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import lcm

from ..errors import CapExceeded
from ..graph import Graph
from .linalg import DEFAULT_FIELD, FieldOps, FieldSpec, rank, rref

KOSZUL_VERTEX_CAP = 4


@dataclass(frozen=True)
class BettiTable:
    """beta_{i,j}; only nonzero entries are stored."""

    entries: dict[tuple[int, int], int]

    @property
    def pd(self) -> int:
        return max(i for i, _ in self.entries)

    @property
    def reg(self) -> int:
        return max(j - i for i, j in self.entries)

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def row_totals(self) -> list[int]:
        out = [0] * (self.pd + 1)
        for (i, _), v in self.entries.items():
            out[i] += v
        return out

    def to_json(self) -> str:
        rows = [[i, j, v] for (i, j), v in sorted(self.entries.items())]
        return json.dumps({"entries": rows})

    @classmethod
    def from_json(cls, text: str) -> "BettiTable":
        return cls({(i, j): v for i, j, v in json.loads(text)["entries"]})

    def __str__(self):
        # Macaulay2-style: row j - i, column i
        width = max(len(str(v)) for v in self.entries.values()) + 1
        lines = []
        for r in range(self.reg + 1):
            cells = []
            for i in range(self.pd + 1):
                v = self.get(i, i + r)
                cells.append(str(v if v else ".").rjust(width))
            lines.append(f"{r:>2}:" + "".join(cells))
        return "\n".join(lines)


class _QuotientRing:
    """Graded pieces of S/J_G with normal forms, cached per degree."""

    def __init__(self, G: Graph, field: FieldSpec):
        self.n = G.n
        self.edges = G.sorted_edges()
        self.ops = FieldOps(field)
        self._cache: dict = {}

    def monomials(self, a: tuple[int, ...], t: int) -> list[tuple[int, ...]]:
        """Exponent vectors (alpha | beta) with alpha + beta = a, |alpha| = t."""
        if any(d < 0 for d in a) or t < 0:
            return []
        out = []
        for alpha in product(*(range(d + 1) for d in a)):
            if sum(alpha) == t:
                out.append(alpha + tuple(d - x for d, x in zip(a, alpha)))
        return out

    def piece(self, a, t):
        """(basis, normal_form) for R in degree (a, t)."""
        key = (a, t)
        if key in self._cache:
            return self._cache[key]
        mons = self.monomials(a, t)
        col = {m: k for k, m in enumerate(mons)}
        n = self.n
        rows = []
        for i, j in self.edges:
            rest = list(a)
            rest[i - 1] -= 1
            rest[j - 1] -= 1
            for m in self.monomials(tuple(rest), t - 1):
                row = [0] * len(mons)
                # x_i y_j - x_j y_i
                p = list(m)
                p[i - 1] += 1
                p[n + j - 1] += 1
                row[col[tuple(p)]] += 1
                q = list(m)
                q[j - 1] += 1
                q[n + i - 1] += 1
                row[col[tuple(q)]] -= 1
                rows.append(row)
        red, pivots = rref(rows, self.ops) if rows else ([], [])
        pivset = set(pivots)
        basis = [m for k, m in enumerate(mons) if k not in pivset]
        bindex = {m: k for k, m in enumerate(basis)}
        ops = self.ops
        # normal form of a monomial: subtract its pivot row if it is a pivot
        pivot_row = dict(zip(pivots, red))

        def normal_form(m) -> dict[int, object]:
            k = col[m]
            if k not in pivot_row:
                return {bindex[m]: 1}
            row = pivot_row[k]
            out = {}
            for c, v in enumerate(row):
                if v and c not in pivset:
                    out[bindex[mons[c]]] = ops.reduce(-v)
            return out

        self._cache[key] = (basis, normal_form)
        return basis, normal_form


def _strand_dims_and_ranks(ring: _QuotientRing, a, t, field) -> list[int]:
    """Betti numbers beta_{i,(a,t)} for i = 0..2n."""
    n = ring.n
    nv = 2 * n
    var_deg = [(v % n, 1 if v < n else 0) for v in range(nv)]

    def chains(i):
        out = []
        for E in combinations(range(nv), i):
            rest = list(a)
            tx = t
            ok = True
            for v in E:
                vert, isx = var_deg[v]
                rest[vert] -= 1
                tx -= isx
                if rest[vert] < 0 or tx < 0:
                    ok = False
                    break
            if not ok:
                continue
            basis, nf = ring.piece(tuple(rest), tx)
            for m in basis:
                out.append((E, m))
        return out

    bases = [chains(i) for i in range(nv + 1)]
    dims = [len(b) for b in bases]
    ranks = [0] * (nv + 2)
    for i in range(1, nv + 1):
        if not dims[i] or not dims[i - 1]:
            continue
        target = {c: k for k, c in enumerate(bases[i - 1])}
        rows = []
        for E, m in bases[i]:
            row: dict = {}
            for pos, v in enumerate(E):
                sign = -1 if pos % 2 else 1
                F = E[:pos] + E[pos + 1:]
                zm = list(m)
                zm[v] += 1
                zm = tuple(zm)
                deg_a = tuple(zm[u] + zm[n + u] for u in range(n))
                basis, nf = ring.piece(deg_a, sum(zm[:n]))
                for b, coef in nf(zm).items():
                    k = target[(F, basis[b])]
                    row[k] = row.get(k, 0) + sign * coef
            rows.append(_integral(row))
        ranks[i] = rank(rows, field)
    return [dims[i] - ranks[i] - ranks[i + 1] for i in range(nv + 1)]


def _integral(row: dict) -> dict[int, int]:
    """Scale a row of Fractions to integers; residues mod p pass through."""
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    return {k: int(v * den) for k, v in row.items() if v}


def koszul_betti(
    G: Graph, field: FieldSpec = DEFAULT_FIELD, max_vertex_degree: int = 2
) -> BettiTable:
    """Graded Betti table of S/J_G; at most four vertices."""
    if G.n > KOSZUL_VERTEX_CAP:
        raise CapExceeded(G.n, KOSZUL_VERTEX_CAP, "Koszul oracle")
    ring = _QuotientRing(G, field)
    entries: dict[tuple[int, int], int] = {}
    for a in product(range(max_vertex_degree + 1), repeat=G.n):
        total = sum(a)
        for t in range(total + 1):
            for i, b in enumerate(_strand_dims_and_ranks(ring, a, t, field)):
                if b:
                    entries[(i, total)] = entries.get((i, total), 0) + b
    return BettiTable(entries)
