"""Seeded random cactus / cycle-clique graphs and chain enumeration.

A random graph is grown block by block: the first block stands alone and
every later block is glued at one vertex, chosen uniformly among the
vertices built so far.  Gluing along single vertices makes every added
piece a block of the result, so the block structure is known by
construction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .cm_cactus import chain_graph
from .errors import SpecError
from .graph import Graph, clique_sum, complete, cycle

KINDS = ("random-cactus", "random-cycle-clique", "chain-enum")


@dataclass(frozen=True)
class BlockChoice:
    kind: str  # "K" or "C"
    size: int

    @property
    def token(self) -> str:
        return f"{self.kind}{self.size}"

    def graph(self) -> Graph:
        return complete(self.size) if self.kind == "K" else cycle(self.size)


def parse_block(token: str) -> BlockChoice:
    t = token.strip().upper()
    if len(t) < 2 or t[0] not in "KC" or not t[1:].isdigit():
        raise SpecError(f"bad block {token!r}; expected K<m> or C<k>")
    size = int(t[1:])
    if t[0] == "K" and size < 2:
        raise SpecError("a clique block needs at least 2 vertices")
    if t[0] == "C" and size < 3:
        raise SpecError("a cycle block needs at least 3 vertices")
    if t[0] == "C" and size == 3:
        return BlockChoice("K", 3)
    return BlockChoice(t[0], size)


def parse_distribution(text: str) -> list[tuple[BlockChoice, float]]:
    """``"K2:1,C4:2,K3"`` -> weighted block choices (weight defaults to 1)."""
    out: dict[BlockChoice, float] = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        tok, _, w = item.partition(":")
        try:
            weight = float(w) if w else 1.0
        except ValueError:
            raise SpecError(f"bad weight in {item!r}") from None
        if weight < 0:
            raise SpecError(f"negative weight in {item!r}")
        block = parse_block(tok)
        out[block] = out.get(block, 0.0) + weight
    if not out or sum(out.values()) <= 0:
        raise SpecError("block distribution is empty")
    return sorted(out.items(), key=lambda kv: (kv[0].kind, kv[0].size))


def _check_cactus_blocks(dist) -> None:
    for block, _ in dist:
        if block.kind == "K" and block.size > 3:
            raise SpecError(f"{block.token} is not a cactus block (use K2, K3 or C<k>)")


def random_block_graph(
    rng: random.Random,
    dist: list[tuple[BlockChoice, float]],
    blocks: tuple[int, int],
    max_vertices: int,
) -> tuple[Graph, list[str]]:
    """One random graph and its block tokens in the order they were added."""
    lo, hi = blocks
    if lo < 1 or hi < lo:
        raise SpecError(f"bad block count range {lo}..{hi}")
    target = rng.randint(lo, hi)
    G = None
    tokens: list[str] = []
    for _ in range(target):
        room = max_vertices - (G.n if G else 0) + (1 if G else 0)
        fits = [(b, w) for b, w in dist if b.size <= room and w > 0]
        if not fits:
            break
        block = rng.choices([b for b, _ in fits], [w for _, w in fits])[0]
        H = block.graph()
        if G is None:
            G = H
        else:
            at = rng.randint(1, G.n)
            G, _ = clique_sum(G, H, [at], [rng.randint(1, H.n)])
        tokens.append(block.token)
    if G is None:
        raise SpecError(f"no block fits in {max_vertices} vertices")
    return G, tokens


def random_graphs(
    kind: str,
    count: int,
    seed: int,
    distribution: str = "K2:1,K3:1,C4:1,C5:1",
    blocks: tuple[int, int] = (1, 4),
    max_vertices: int = 8,
) -> Iterator[tuple[str, Graph]]:
    """``count`` graphs from one seeded stream, as (id, graph) pairs."""
    if kind not in ("random-cactus", "random-cycle-clique"):
        raise SpecError(f"unknown random kind {kind!r}")
    dist = parse_distribution(distribution)
    if kind == "random-cactus":
        _check_cactus_blocks(dist)
    rng = random.Random(seed)
    for i in range(count):
        G, tokens = random_block_graph(rng, dist, blocks, max_vertices)
        yield f"{kind}:{seed}:{i}:{'+'.join(tokens)}", G


def chain_sequences(alphabet, length: int, dedup: bool = True) -> list[tuple[str, ...]]:
    """All block sequences of the given length; with ``dedup`` a sequence
    and its reverse count once."""
    seqs = list(product(alphabet, repeat=length))
    if not dedup:
        return seqs
    return sorted({min(s, s[::-1]) for s in seqs})


def chain_vertices(seq) -> int:
    return 1 + sum(parse_block(t).size - 1 for t in seq)


def enumerate_chains(
    alphabet=("K2", "K3", "C4"),
    max_length: int = 4,
    max_vertices: int = 9,
    min_length: int = 1,
    dedup: bool = True,
) -> Iterator[tuple[str, Graph]]:
    """Chains B_1, ..., B_l with min_length <= l <= max_length that fit in
    ``max_vertices``; consecutive blocks meet at one vertex and a cycle is
    left at the neighbour of its entry vertex."""
    alphabet = [parse_block(t).token for t in alphabet]
    for length in range(min_length, max_length + 1):
        for seq in chain_sequences(alphabet, length, dedup):
            if chain_vertices(seq) <= max_vertices:
                spec = ",".join(seq)
                yield "chain:" + spec, chain_graph(spec)
