"""Monomial semilinear maps acting on codes.

A :class:`MonomialMap` sends ``x = sum(x_i e_i)`` to
``sum(diag[i] * sigma(x_i) * e_{perm[i]})`` where ``sigma`` is the
Frobenius power ``x -> x^(p^sigma_exp)``.  With ``diag`` all ones this is
a strict monomial map (``e_i -> e_{perm[i]}`` twisted by ``sigma``);
``mode="generalized"`` also allows non-trivial diagonals.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations, product
from math import factorial
from typing import Iterator

from .codegraph import CodeGraph
from .codespace import Subspace, canonicalize, enumerate_codes, count_nondegenerate
from .errors import DimensionMismatch, SearchSpaceTooLarge
from .gf import frobenius, make_field

MODES = ("strict", "generalized")


@dataclass(frozen=True)
class MonomialMap:
    q: int
    perm: tuple[int, ...]
    sigma_exp: int = 0
    diag: tuple[int, ...] | None = None

    def __post_init__(self):
        F = make_field(self.q)
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)):
            raise ValueError(f"not a permutation of 0..{n - 1}: {self.perm}")
        object.__setattr__(self, "sigma_exp", self.sigma_exp % F.m)
        diag = (1,) * n if self.diag is None else tuple(self.diag)
        if len(diag) != n or any(d == 0 or d >= self.q for d in diag):
            raise ValueError("diag must hold n non-zero field elements")
        object.__setattr__(self, "diag", diag)

    @property
    def n(self) -> int:
        return len(self.perm)

    @property
    def is_strict(self) -> bool:
        return all(d == 1 for d in self.diag)

    @classmethod
    def identity(cls, n: int, q: int) -> "MonomialMap":
        return cls(q, tuple(range(n)))

    def __call__(self, x) -> tuple[int, ...]:
        F = make_field(self.q)
        fr, mul = F.frob_pow[self.sigma_exp], F.mul
        y = [0] * self.n
        for i, xi in enumerate(x):
            y[self.perm[i]] = mul[self.diag[i]][fr[xi]]
        return tuple(y)

    def __matmul__(self, other: "MonomialMap") -> "MonomialMap":
        """Composition ``self o other`` (apply ``other`` first)."""
        if (self.q, self.n) != (other.q, other.n):
            raise DimensionMismatch("maps act on different spaces")
        F = make_field(self.q)
        perm = tuple(self.perm[other.perm[i]] for i in range(self.n))
        diag = tuple(
            F.mul[self.diag[other.perm[i]]][frobenius(F, other.diag[i], self.sigma_exp)] for i in range(self.n)
        )
        return MonomialMap(self.q, perm, self.sigma_exp + other.sigma_exp, diag)

    def inverse(self) -> "MonomialMap":
        F = make_field(self.q)
        inv_perm = [0] * self.n
        for i, j in enumerate(self.perm):
            inv_perm[j] = i
        e = (-self.sigma_exp) % F.m
        diag = tuple(frobenius(F, F.inv[self.diag[inv_perm[j]]], e) for j in range(self.n))
        return MonomialMap(self.q, tuple(inv_perm), e, diag)

    def to_json(self) -> dict:
        return {"sigma_exp": self.sigma_exp, "perm": [p + 1 for p in self.perm], "diag": list(self.diag)}

    @classmethod
    def from_json(cls, data: dict | str, q: int) -> "MonomialMap":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(q, tuple(p - 1 for p in data["perm"]), data.get("sigma_exp", 0), data.get("diag"))


def apply(g: MonomialMap, S: Subspace) -> Subspace:
    """Image of ``S`` under ``g``, re-canonicalized."""
    if (g.q, g.n) != (S.q, S.n):
        raise DimensionMismatch("map and subspace disagree on (q, n)")
    return canonicalize(S.field, [g(row) for row in S.gen], S.n)


def group_order(n: int, q: int, mode: str = "strict") -> int:
    """Order of the monomial group acting on subspaces (scalars in the generalized case factored out)."""
    m = make_field(q).m
    if mode == "strict":
        return m * factorial(n)
    if mode == "generalized":
        return m * factorial(n) * (q - 1) ** (n - 1)
    raise ValueError(f"unknown mode {mode!r}")


def group_elements(n: int, q: int, mode: str = "strict") -> Iterator[MonomialMap]:
    """Deterministic listing, identity first.

    In generalized mode the first diagonal entry is fixed to 1, since a
    global scalar fixes every subspace.
    """
    F = make_field(q)
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "strict":
        diags = [(1,) * n]
    else:
        diags = [(1,) + rest for rest in product(F.nonzero, repeat=n - 1)] if n else [()]
    for e in range(F.m):
        for perm in permutations(range(n)):
            for d in diags:
                yield MonomialMap(q, perm, e, d)


def generators(n: int, q: int, mode: str = "strict") -> list[MonomialMap]:
    F = make_field(q)
    gens = []
    if n >= 2:
        gens.append(MonomialMap(q, (1, 0) + tuple(range(2, n))))
        gens.append(MonomialMap(q, tuple(range(1, n)) + (0,)))
    if F.m > 1:
        gens.append(MonomialMap(q, tuple(range(n)), 1))
    if mode == "generalized" and q > 2 and n >= 1:
        gens.append(MonomialMap(q, tuple(range(n)), 0, (F.primitive_element(),) + (1,) * (n - 1)))
    return gens


def vertex_permutation(g: MonomialMap, G: CodeGraph) -> tuple[int, ...] | None:
    """Permutation of vertex indices induced by ``g``, or ``None`` if some image leaves the vertex set."""
    out = []
    for X in G.vertices:
        j = G.index.get(apply(g, X))
        if j is None:
            return None
        out.append(j)
    return tuple(out)


def is_automorphism(adj, perm) -> bool:
    """True iff the vertex permutation ``perm`` preserves adjacency both ways."""
    if sorted(perm) != list(range(len(adj))):
        return False
    for i, a in enumerate(adj):
        image = 0
        mask = a
        while mask:
            low = mask & -mask
            image |= 1 << perm[low.bit_length() - 1]
            mask ^= low
        if image != adj[perm[i]]:
            return False
    return True


def induces_automorphism(g: MonomialMap, G: CodeGraph) -> bool:
    perm = vertex_permutation(g, G)
    return perm is not None and is_automorphism(G.adj, perm)


def monomial_image(G: CodeGraph, mode: str = "strict") -> set[tuple[int, ...]]:
    """Distinct vertex permutations induced by the whole monomial group.

    Its size is the order of the faithful image of the group; elements
    that leave the vertex set are omitted (there are none for
    non-degenerate codes).
    """
    out = set()
    for g in group_elements(G.n, G.q, mode):
        perm = vertex_permutation(g, G)
        if perm is not None:
            out.add(perm)
    return out


def are_equivalent(C1: Subspace, C2: Subspace, mode: str = "strict", max_n: int = 8,
                   max_group: int = 2_000_000) -> MonomialMap | None:
    """A monomial map carrying ``C1`` onto ``C2``, or ``None``.

    Exhaustive over the group; raises :class:`SearchSpaceTooLarge` when
    ``n > max_n`` or the group has more than ``max_group`` elements.
    """
    if (C1.q, C1.n, C1.k) != (C2.q, C2.n, C2.k):
        raise DimensionMismatch("codes differ in (q, n, k)")
    if C1.n > max_n:
        raise SearchSpaceTooLarge(f"n={C1.n} exceeds the equivalence guard {max_n}")
    if group_order(C1.n, C1.q, mode) > max_group:
        raise SearchSpaceTooLarge(f"group order {group_order(C1.n, C1.q, mode)} exceeds {max_group}")
    for g in group_elements(C1.n, C1.q, mode):
        if apply(g, C1) == C2:
            return g
    return None


def orbit_of(S: Subspace, mode: str = "strict") -> set[Subspace]:
    gens = generators(S.n, S.q, mode)
    seen = {S}
    stack = [S]
    while stack:
        X = stack.pop()
        for g in gens:
            Y = apply(g, X)
            if Y not in seen:
                seen.add(Y)
                stack.append(Y)
    return seen


def orbits(n: int, k: int, q: int, mode: str = "strict", max_codes: int = 200_000) -> list[list[Subspace]]:
    """Orbit partition of the non-degenerate ``[n, k]_q`` codes.

    Each orbit is sorted with its canonical representative (smallest
    generator matrix) first; orbits are sorted by representative.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    total = count_nondegenerate(n, k, q)
    if total > max_codes:
        raise SearchSpaceTooLarge(f"{total} codes exceed the orbit guard {max_codes}")
    remaining = set(enumerate_codes(n, k, q))
    out = []
    while remaining:
        orb = orbit_of(min(remaining, key=Subspace.sort_key), mode)
        remaining -= orb
        out.append(sorted(orb, key=Subspace.sort_key))
    out.sort(key=lambda o: o[0].sort_key())
    return out
