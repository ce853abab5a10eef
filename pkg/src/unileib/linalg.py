"""Small exact linear algebra over an arbitrary Field.

Matrices are lists of row lists holding raw field elements.  Everything here
is deterministic (pivoting always picks the first nonzero entry), so echelon
forms are canonical and safe to serialize.
"""

from __future__ import annotations

from .fields import Field


def identity(n: int, field: Field):
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int, field: Field):
    return [[field.zero] * cols for _ in range(rows)]


def matmul(a, b, field: Field):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = zeros(rows, cols, field)
    for i in range(rows):
        ai = a[i]
        for k in range(inner):
            c = ai[k]
            if field.is_zero(c):
                continue
            bk = b[k]
            oi = out[i]
            for j in range(cols):
                oi[j] = field.add(oi[j], field.mul(c, bk[j]))
    return out


def mat_vec(a, v, field: Field):
    return [
        _dot(row, v, field)
        for row in a
    ]


def _dot(row, v, field):
    acc = field.zero
    for c, x in zip(row, v):
        acc = field.add(acc, field.mul(c, x))
    return acc


def row_echelon(matrix, field: Field):
    """Reduced row echelon form; returns (rref, pivot_columns)."""
    m = [list(r) for r in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if not field.is_zero(m[i][c])), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(inv, x) for x in m[r]]
        for i in range(rows):
            if i != r and not field.is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(matrix, field: Field) -> int:
    return len(row_echelon(matrix, field)[1]) if matrix else 0


def column_space_basis(columns, field: Field):
    """Canonical basis of the span of the given column vectors.

    Returns reduced columns (echelon over the transpose), deterministic.
    """
    if not columns:
        return []
    rows = [list(c) for c in columns]
    rref, pivots = row_echelon(rows, field)
    return [rref[k] for k in range(len(pivots))]


def nullspace(matrix, field: Field):
    """Basis vectors of the right kernel, canonical and deterministic."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    if rows == 0:
        return [[field.one if i == j else field.zero for i in range(cols)] for j in range(cols)]
    rref, pivots = row_echelon(matrix, field)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [field.zero] * cols
        v[fcol] = field.one
        for r, pcol in enumerate(pivots):
            v[pcol] = field.neg(rref[r][fcol])
        basis.append(v)
    return basis


def invert(matrix, field: Field):
    """Inverse matrix, or None when singular."""
    n = len(matrix)
    aug = [list(matrix[i]) + identity(n, field)[i] for i in range(n)]
    rref, pivots = row_echelon(aug, field)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in rref[:n]]


def is_invertible(matrix, field: Field) -> bool:
    n = len(matrix)
    return n == 0 or rank(matrix, field) == n


def transpose(matrix):
    return [list(col) for col in zip(*matrix)] if matrix else []


def solve(matrix, rhs, field: Field):
    """One solution of A·x = b, or None when inconsistent."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    aug = [list(matrix[i]) + [rhs[i]] for i in range(rows)]
    rref, pivots = row_echelon(aug, field)
    if cols in pivots:
        return None
    x = [field.zero] * cols
    for r, c in enumerate(pivots):
        x[c] = rref[r][cols]
    return x
