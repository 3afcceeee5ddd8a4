"""Exact ranks of integer matrices over GF(p) or the rationals.

Matrices are given as rows, each a ``{column: int}`` dict.  Elimination is
online: every incoming row is reduced against the pivots found so far.
Over the rationals rows stay integral (fraction-free cross multiplication
followed by content removal), so nothing is rounded and entries stay small
for boundary-type matrices.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Union

Q = "Q"
FieldSpec = Union[int, str]
DEFAULT_FIELD = 32003


def parse_field(spec) -> FieldSpec:
    """``2``, ``"32003"``, ``"Q"`` ... -> a prime int or ``"Q"``."""
    if isinstance(spec, str):
        s = spec.strip()
        if s.upper() in ("Q", "QQ", "0"):
            return Q
        try:
            spec = int(s)
        except ValueError:
            raise ValueError(f"unknown field {spec!r}") from None
    if isinstance(spec, int) and spec >= 2 and _is_prime(spec):
        return spec
    raise ValueError(f"field must be a prime or Q, got {spec!r}")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def field_name(field: FieldSpec) -> str:
    return "Q" if field == Q else f"GF({field})"


def rank_gf2(rows: Iterable[int]) -> int:
    """Rank over GF(2) of rows given as int bitsets."""
    pivots: dict[int, int] = {}
    for row in rows:
        while row:
            top = row.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = row
                break
            row ^= p
    return len(pivots)


def _rank_mod_p(rows: Iterable[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        r = {c: v % p for c, v in row.items() if v % p}
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(r[c], p - 2, p)
                pivots[c] = {k: v * inv % p for k, v in r.items()}
                break
            f = r[c]
            for k, v in piv.items():
                nv = (r.get(k, 0) - f * v) % p
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return len(pivots)


def _rank_rational(rows: Iterable[dict[int, int]]) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                pivots[c] = _primitive(r)
                break
            a, b = piv[c], r[c]
            # r <- a*r - b*piv clears column c without leaving the integers
            new = {k: a * v for k, v in r.items()}
            for k, v in piv.items():
                nv = new.get(k, 0) - b * v
                if nv:
                    new[k] = nv
                else:
                    new.pop(k, None)
            r = _primitive(new) if new else new
    return len(pivots)


def _primitive(r: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in r.values():
        g = gcd(g, v)
        if g == 1:
            return r
    return {k: v // g for k, v in r.items()}


def rank(rows: Iterable[dict[int, int]], field: FieldSpec = DEFAULT_FIELD) -> int:
    if field == Q:
        return _rank_rational(rows)
    if field == 2:
        return rank_gf2(_to_bits(r) for r in rows)
    return _rank_mod_p(rows, field)


def _to_bits(row: dict[int, int]) -> int:
    bits = 0
    for c, v in row.items():
        if v & 1:
            bits |= 1 << c
    return bits


# --- dense helpers for the Koszul oracle -----------------------------------

class FieldOps:
    """Scalar arithmetic for dense elimination."""

    def __init__(self, field: FieldSpec):
        self.field = field
        self.p = None if field == Q else field

    def coerce(self, v):
        return Fraction(v) if self.p is None else v % self.p

    def inv(self, v):
        return 1 / v if self.p is None else pow(v, self.p - 2, self.p)

    def reduce(self, v):
        return v if self.p is None else v % self.p


def rref(rows: list[list], ops: FieldOps) -> tuple[list[list], list[int]]:
    """Reduced row echelon form of dense rows; returns (rows, pivot columns)."""
    mat = [[ops.coerce(v) for v in row] for row in rows]
    ncols = len(mat[0]) if mat else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = ops.inv(mat[r][c])
        mat[r] = [ops.reduce(v * inv) for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [ops.reduce(a - f * b) for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots
