"""Canonical subspaces of GF(q)^n, Grassmannian enumeration and code counts.

A :class:`Subspace` stores the reduced row echelon generator matrix of a
subspace.  Because the RREF of a row space is unique, two ``Subspace``
objects are equal exactly when they describe the same subspace, and they
can be used directly as set members and dictionary keys.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from math import comb
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .errors import GrasscodeError, ZeroSpace
from .gf import Field, make_field
from .linalg import Rows, intersect_and_sum, reduce_vector, rref


class MatrixFormatError(GrasscodeError, ValueError):
    pass


@dataclass(frozen=True)
class Subspace:
    """A non-zero subspace of GF(q)^n in canonical (RREF) form.

    ``gen`` must already be in reduced row echelon form without zero rows;
    use :func:`canonicalize` to build one from arbitrary generators.
    """

    q: int
    n: int
    gen: Rows

    @property
    def k(self) -> int:
        return len(self.gen)

    @property
    def field(self) -> Field:
        return make_field(self.q)

    @cached_property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(c for c, x in enumerate(row) if x) for row in self.gen)

    def __contains__(self, v) -> bool:
        if len(v) != self.n:
            return False
        return not any(reduce_vector(self.field, self.gen, self.pivots, v))

    def issubspace(self, other: "Subspace") -> bool:
        """True iff ``self`` is contained in ``other``."""
        return self.k <= other.k and all(row in other for row in self.gen)

    def sort_key(self) -> tuple:
        return (self.k, self.gen)

    def __repr__(self) -> str:
        rows = " / ".join("".join(str(x) if self.q <= 10 else f"{x}," for x in r) for r in self.gen)
        return f"Subspace(q={self.q}, n={self.n}, k={self.k}: {rows})"


@dataclass(frozen=True)
class CoordinateProfile:
    """Zero columns of a subspace (0-based), i.e. the coordinate hyperplanes containing it."""

    zero_columns: frozenset[int]

    @property
    def c(self) -> int:
        return len(self.zero_columns)


def canonicalize(F: Field, rows: Sequence[Sequence[int]], n: int | None = None) -> Subspace:
    """Subspace spanned by ``rows``; raises :class:`ZeroSpace` if they span {0}."""
    if n is None:
        if not rows:
            raise ZeroSpace("no rows given")
        n = len(rows[0])
    R, r, _ = rref(F, rows, n)
    if r == 0:
        raise ZeroSpace("the rows span the zero subspace")
    return Subspace(F.q, n, R)


def span(F: Field, *vectors: Sequence[int]) -> Subspace:
    return canonicalize(F, [tuple(v) for v in vectors])


def unit_vector(n: int, i: int) -> tuple[int, ...]:
    v = [0] * n
    v[i] = 1
    return tuple(v)


def whole_space(F: Field, n: int) -> Subspace:
    return Subspace(F.q, n, tuple(unit_vector(n, i) for i in range(n)))


def coordinate_hyperplane(F: Field, n: int, i: int) -> Subspace:
    """``C_i``: the kernel of the ``i``-th coordinate functional (0-based ``i``)."""
    return Subspace(F.q, n, tuple(unit_vector(n, j) for j in range(n) if j != i))


def coordinate_profile(S: Subspace) -> CoordinateProfile:
    return CoordinateProfile(frozenset(j for j, col in enumerate(zip(*S.gen)) if not any(col)))


def is_nondegenerate(S: Subspace) -> bool:
    """True iff ``S`` lies in no coordinate hyperplane (no zero column)."""
    return all(any(col) for col in zip(*S.gen))


def intersection(X: Subspace, Y: Subspace) -> Rows:
    """RREF basis of ``X & Y`` (possibly empty)."""
    return intersect_and_sum(X.field, X.gen, Y.gen, X.n)[0]


def subspace_sum(X: Subspace, Y: Subspace) -> Subspace:
    return Subspace(X.q, X.n, intersect_and_sum(X.field, X.gen, Y.gen, X.n)[1])


def vectors(S: Subspace) -> Iterator[tuple[int, ...]]:
    """All ``q**k`` vectors of ``S``."""
    F = S.field
    add, mul = F.add, F.mul
    for coeffs in product(range(F.q), repeat=S.k):
        v = [0] * S.n
        for a, row in zip(coeffs, S.gen):
            if a:
                ma = mul[a]
                v = [add[x][ma[y]] for x, y in zip(v, row)]
        yield tuple(v)


def projective_points(F: Field, d: int) -> Iterator[tuple[int, ...]]:
    """One representative (first non-zero entry 1) of each 1-dim subspace of F^d."""
    for lead in range(d):
        for tail in product(range(F.q), repeat=d - lead - 1):
            yield (0,) * lead + (1,) + tail


def _extend(F: Field, S: Subspace, v: tuple[int, ...]) -> Subspace:
    # v is zero on S's pivots and has leading entry 1, so one elimination
    # step and a sorted insert give the RREF of S + <v>.
    p = next(c for c, x in enumerate(v) if x)
    mul, sub = F.mul, F.sub
    rows = []
    for row in S.gen:
        f = row[p]
        rows.append(tuple(sub[a][mul[f][b]] for a, b in zip(row, v)) if f else row)
    piv = S.pivots
    pos = sum(1 for c in piv if c < p)
    rows.insert(pos, v)
    return Subspace(S.q, S.n, tuple(rows))


def superspaces(S: Subspace) -> Iterator[Subspace]:
    """All ``(k+1)``-dimensional subspaces containing ``S``."""
    F = S.field
    free = [c for c in range(S.n) if c not in S.pivots]
    for point in projective_points(F, len(free)):
        v = [0] * S.n
        for c, x in zip(free, point):
            v[c] = x
        yield _extend(F, S, tuple(v))


def section_rows(F: Field, basis: Sequence[Sequence[int]], w: Sequence[int], n: int) -> list[tuple[int, ...]]:
    """Generators of ``{sum(a_i * basis_i) : sum(a_i * w_i) = 0}`` for non-zero ``w``."""
    t = next(i for i, x in enumerate(w) if x)
    # a = e_i - (w_i / w_t) e_t for i != t spans the kernel of w
    mul, sub, inv = F.mul, F.sub, F.inv
    winv = inv[w[t]]
    bt = basis[t]
    rows = []
    for i, bi in enumerate(basis):
        if i == t:
            continue
        f = mul[w[i]][winv]
        rows.append(tuple(sub[a][mul[f][b]] for a, b in zip(bi, bt)) if f else tuple(bi))
    return rows


def hyperplanes(S: Subspace) -> Iterator[Subspace]:
    """All ``(k-1)``-dimensional subspaces of ``S`` (requires ``k >= 2``)."""
    F = S.field
    for w in projective_points(F, S.k):
        R, _, _ = rref(F, section_rows(F, S.gen, w, S.n), S.n)
        yield Subspace(S.q, S.n, R)


def q_integer(n: int, q: int) -> int:
    """``[n]_q = (q**n - 1) / (q - 1)``."""
    return (q**n - 1) // (q - 1)


def gaussian(n: int, k: int, q: int) -> int:
    """Number of ``k``-dimensional subspaces of GF(q)^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def count_nondegenerate(n: int, k: int, q: int) -> int:
    """Inclusion-exclusion count of ``k``-dim subspaces lying in no coordinate hyperplane."""
    return sum((-1) ** i * comb(n, i) * gaussian(n - i, k, q) for i in range(n - k + 1))


def _pivot_layout(n: int, pivots: tuple[int, ...]) -> list[tuple[int, int]]:
    """(row, column) positions of the free entries of an RREF with these pivots."""
    pset = set(pivots)
    return [(i, c) for i, p in enumerate(pivots) for c in range(p + 1, n) if c not in pset]


def _rref_matrices(n: int, k: int, q: int, pivots: tuple[int, ...], nondegenerate: bool) -> Iterator[Rows]:
    layout = _pivot_layout(n, pivots)
    groups = None
    if nondegenerate:
        pset = set(pivots)
        groups = [tuple(idx for idx, (_, c) in enumerate(layout) if c == col) for col in range(n) if col not in pset]
        if any(not g for g in groups):
            return
    base = [[0] * n for _ in range(k)]
    for i, p in enumerate(pivots):
        base[i][p] = 1
    for vals in product(range(q), repeat=len(layout)):
        if groups is not None and not all(any(vals[j] for j in g) for g in groups):
            continue
        for (i, c), x in zip(layout, vals):
            base[i][c] = x
        yield tuple(tuple(r) for r in base)


def pivot_sets(n: int, k: int) -> Iterator[tuple[int, ...]]:
    return combinations(range(n), k)


def enumerate_grassmannian(n: int, k: int, q: int, pivots: Iterable[tuple[int, ...]] | None = None) -> Iterator[Subspace]:
    """Every ``k``-dim subspace of GF(q)^n exactly once.

    Order: pivot sets lexicographically, then free entries in
    ``itertools.product`` order.  ``pivots`` restricts the enumeration to
    the given pivot sets (used to partition work).
    """
    make_field(q)
    for piv in pivots if pivots is not None else pivot_sets(n, k):
        for gen in _rref_matrices(n, k, q, tuple(piv), False):
            yield Subspace(q, n, gen)


def enumerate_codes(n: int, k: int, q: int, pivots: Iterable[tuple[int, ...]] | None = None) -> Iterator[Subspace]:
    """Non-degenerate members of :func:`enumerate_grassmannian`, same order."""
    make_field(q)
    for piv in pivots if pivots is not None else pivot_sets(n, k):
        for gen in _rref_matrices(n, k, q, tuple(piv), True):
            yield Subspace(q, n, gen)


# --- generator matrix text format -------------------------------------------------

def parse_matrix(text: str, q: int) -> list[tuple[int, ...]]:
    """Parse whitespace-separated rows of labels ``0..q-1``; ``#`` starts a comment."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            row = tuple(int(tok) for tok in line.split())
        except ValueError as exc:
            raise MatrixFormatError(f"line {lineno}: {exc}") from None
        if any(x < 0 or x >= q for x in row):
            raise MatrixFormatError(f"line {lineno}: entries must lie in 0..{q - 1}")
        if rows and len(row) != len(rows[0]):
            raise MatrixFormatError(f"line {lineno}: expected {len(rows[0])} entries, got {len(row)}")
        rows.append(row)
    if not rows:
        raise MatrixFormatError("matrix is empty")
    return rows


def read_matrix(path: str | Path, q: int) -> list[tuple[int, ...]]:
    return parse_matrix(Path(path).read_text(), q)


def format_matrix(rows: Sequence[Sequence[int]]) -> str:
    return "".join(" ".join(str(x) for x in row) + "\n" for row in rows)
