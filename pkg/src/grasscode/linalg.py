"""Exact matrix algebra over GF(q).

Matrices are sequences of rows; rows are tuples of field labels.  All
functions are pure and return tuples, so results can be used as
dictionary keys.  Column indices are 0-based here; user-facing reports
convert to 1-based.
"""

from __future__ import annotations

from typing import Sequence

from .gf import Field

Row = tuple[int, ...]
Rows = tuple[Row, ...]


def rref(F: Field, rows: Sequence[Sequence[int]], ncols: int | None = None) -> tuple[Rows, int, tuple[int, ...]]:
    """Reduced row echelon form.

    Returns ``(R, rank, pivots)`` with zero rows removed.  ``ncols`` is only
    needed when ``rows`` is empty.
    """
    mat = [list(r) for r in rows]
    if not mat:
        return (), 0, ()
    n = len(mat[0]) if ncols is None else ncols
    mul, sub, inv = F.mul, F.sub, F.inv
    pivots = []
    r = 0
    nrows = len(mat)
    for c in range(n):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        lead = mat[r][c]
        if lead != 1:
            scale = mul[inv[lead]]
            mat[r] = [scale[x] for x in mat[r]]
        prow = mat[r]
        for i in range(nrows):
            if i != r:
                f = mat[i][c]
                if f:
                    mf = mul[f]
                    mat[i] = [sub[a][mf[b]] for a, b in zip(mat[i], prow)]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in mat[:r]), r, tuple(pivots)


def rank(F: Field, rows: Sequence[Sequence[int]]) -> int:
    return rref(F, rows)[1]


def reduce_vector(F: Field, R: Sequence[Row], pivots: Sequence[int], v: Sequence[int]) -> Row:
    """Residue of ``v`` after eliminating the pivot columns of an RREF ``R``."""
    v = list(v)
    mul, sub = F.mul, F.sub
    for row, c in zip(R, pivots):
        f = v[c]
        if f:
            mf = mul[f]
            v = [sub[a][mf[b]] for a, b in zip(v, row)]
    return tuple(v)


def contains_vector(F: Field, rows: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    """True iff ``v`` lies in the row space of ``rows``."""
    R, _, piv = rref(F, rows, len(v))
    return not any(reduce_vector(F, R, piv, v))


def combine(F: Field, coeffs: Sequence[int], rows: Sequence[Sequence[int]], ncols: int) -> Row:
    """The linear combination ``sum(coeffs[i] * rows[i])``."""
    out = [0] * ncols
    add, mul = F.add, F.mul
    for a, row in zip(coeffs, rows):
        if a:
            ma = mul[a]
            out = [add[x][ma[y]] for x, y in zip(out, row)]
    return tuple(out)


def intersect_and_sum(F: Field, A: Sequence[Sequence[int]], B: Sequence[Sequence[int]], ncols: int | None = None) -> tuple[Rows, Rows]:
    """Bases (in RREF) of ``rowspace(A) & rowspace(B)`` and ``rowspace(A) + rowspace(B)``.

    Zassenhaus: row reduce ``[[A, A], [B, 0]]``.  Rows whose left half is
    non-zero give the sum; rows with zero left half carry the intersection
    in their right half.
    """
    if ncols is None:
        ncols = len(A[0]) if A else len(B[0])
    zero = (0,) * ncols
    block = [tuple(a) + tuple(a) for a in A] + [tuple(b) + zero for b in B]
    R, _, _ = rref(F, block, 2 * ncols)
    plus = [row[:ncols] for row in R if any(row[:ncols])]
    cap = [row[ncols:] for row in R if not any(row[:ncols])]
    return rref(F, cap, ncols)[0], rref(F, plus, ncols)[0]


def kernel(F: Field, rows: Sequence[Sequence[int]], ncols: int) -> Rows:
    """Basis of the right null space ``{x : M x = 0}``, in RREF."""
    R, r, piv = rref(F, rows, ncols)
    free = [c for c in range(ncols) if c not in piv]
    neg = F.neg
    basis = []
    for f in free:
        x = [0] * ncols
        x[f] = 1
        for row, c in zip(R, piv):
            x[c] = neg[row[f]]
        basis.append(tuple(x))
    return rref(F, basis, ncols)[0]


def transpose(rows: Sequence[Sequence[int]]) -> Rows:
    return tuple(zip(*rows))
