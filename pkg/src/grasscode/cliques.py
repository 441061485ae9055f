"""Bron-Kerbosch maximal clique enumeration on bitset adjacency.

Used as an independent oracle for the star/top classification, so it
knows nothing about subspaces: it takes neighbour bitsets only.
"""

from __future__ import annotations

from typing import Iterator, Sequence


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def find_maximal_cliques(adj: Sequence[int]) -> Iterator[frozenset[int]]:
    """Yield every maximal clique once (Tomita pivoting)."""

    def expand(R: int, P: int, X: int) -> Iterator[int]:
        if not P and not X:
            yield R
            return
        pivot = max(_bits(P | X), key=lambda u: bin(P & adj[u]).count("1"))
        for v in _bits(P & ~adj[pivot]):
            yield from expand(R | 1 << v, P & adj[v], X & adj[v])
            P &= ~(1 << v)
            X |= 1 << v

    if not adj:
        return
    for R in expand(0, (1 << len(adj)) - 1, 0):
        yield frozenset(_bits(R))
