"""Order of a graph's automorphism group by individualize-and-refine search.

The order is the product of orbit lengths along a base: at each level a
base vertex ``b`` is individualized, and for each candidate image ``c`` in
its colour cell a backtracking search decides whether some automorphism
fixing the earlier base points maps ``b`` to ``c``.  Colour refinement only
prunes; every accepted leaf is checked edge by edge, so the result does
not depend on the invariants used.
"""

from __future__ import annotations

from collections import Counter
from typing import Sequence

from .cliques import find_maximal_cliques
from .codegraph import CodeGraph
from .equiv import is_automorphism
from .errors import SearchSpaceTooLarge


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _refine_pair(adj: Sequence[int], left: list[int], right: list[int]):
    """Equitable refinement of two colourings in lockstep.

    Returns the refined pair, or ``None`` when the colourings cannot
    correspond under any isomorphism.
    """
    N = len(adj)
    while True:
        ncolors = max(left) + 1 if N else 0
        sigs = []
        for col in (left, right):
            masks = [0] * ncolors
            for v, c in enumerate(col):
                masks[c] |= 1 << v
            sigs.append([(col[v], tuple(_popcount(adj[v] & m) for m in masks)) for v in range(N)])
        if Counter(sigs[0]) != Counter(sigs[1]):
            return None
        table = {s: i for i, s in enumerate(sorted(set(sigs[0])))}
        new_left = [table[s] for s in sigs[0]]
        new_right = [table[s] for s in sigs[1]]
        if len(table) == ncolors:
            return new_left, new_right
        left, right = new_left, new_right


def _individualize(col: list[int], v: int) -> list[int]:
    out = list(col)
    out[v] = max(col) + 1
    return out


def _target_cell(col: list[int]) -> int | None:
    sizes = Counter(col)
    cells = [(size, c) for c, size in sizes.items() if size > 1]
    return min(cells)[1] if cells else None


def _find_isomorphism(adj: Sequence[int], left: list[int], right: list[int]) -> list[int] | None:
    refined = _refine_pair(adj, left, right)
    if refined is None:
        return None
    left, right = refined
    cell = _target_cell(left)
    if cell is None:
        where = {c: u for u, c in enumerate(right)}
        perm = [where[c] for c in left]
        return perm if is_automorphism(adj, perm) else None
    v = left.index(cell)
    for u in (u for u, c in enumerate(right) if c == cell):
        perm = _find_isomorphism(adj, _individualize(left, v), _individualize(right, u))
        if perm is not None:
            return perm
    return None


def clique_invariants(adj: Sequence[int]) -> list[tuple]:
    """Per-vertex (degree, sorted sizes of maximal cliques through it)."""
    through: list[list[int]] = [[] for _ in adj]
    for clique in find_maximal_cliques(adj):
        for v in clique:
            through[v].append(len(clique))
    return [(_popcount(a), tuple(sorted(t))) for a, t in zip(adj, through)]


def automorphism_order(adj: Sequence[int], invariants: Sequence | None = None) -> int:
    """Exact order of the automorphism group of the graph with bitsets ``adj``.

    ``invariants`` (one hashable value per vertex, preserved by every
    automorphism) seeds the initial colouring.
    """
    N = len(adj)
    if N == 0:
        return 1
    if invariants is None:
        invariants = [0] * N
    table = {x: i for i, x in enumerate(sorted(set(invariants)))}
    col = [table[x] for x in invariants]
    col, _ = _refine_pair(adj, col, list(col))
    order = 1
    while (cell := _target_cell(col)) is not None:
        b = col.index(cell)
        base = _individualize(col, b)
        orbit = sum(
            1 for c in range(N)
            if col[c] == cell and (c == b or _find_isomorphism(adj, base, _individualize(col, c)) is not None)
        )
        order *= orbit
        col, _ = _refine_pair(adj, base, list(base))
    return order


def automorphism_group_order(G: CodeGraph, max_vertices: int = 64, use_invariants: bool = True) -> int:
    """``|Aut(G)|``; raises :class:`SearchSpaceTooLarge` above ``max_vertices``."""
    if len(G) > max_vertices:
        raise SearchSpaceTooLarge(f"{len(G)} vertices exceed the automorphism guard {max_vertices}")
    inv = clique_invariants(G.adj) if use_invariants else None
    return automorphism_order(G.adj, inv)
