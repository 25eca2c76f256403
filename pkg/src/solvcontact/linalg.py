"""Exact dense linear algebra over any of the scalar fields.

Ranks use fraction-free (Bareiss) elimination with full pivoting; canonical
bases (kernels, reduced echelon forms) use exact Gauss-Jordan.  Matrices are
plain lists of lists; vectors are lists.  Nothing here is ever approximate.
"""

from __future__ import annotations

from .scalars import Field, Scalar

Matrix = list[list[Scalar]]


def zeros(rows: int, cols: int, field: Field) -> Matrix:
    z = field.zero()
    return [[z] * cols for _ in range(rows)]


def identity(n: int, field: Field) -> Matrix:
    m = zeros(n, n, field)
    one = field.one()
    for i in range(n):
        m[i][i] = one
    return m


def mat_mul(a: Matrix, b: Matrix, field: Field) -> Matrix:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = zeros(rows, cols, field)
    for i in range(rows):
        for k in range(inner):
            aik = a[i][k]
            if aik == field.zero():
                continue
            for j in range(cols):
                out[i][j] = out[i][j] + aik * b[k][j]
    return out


def mat_vec(a: Matrix, v: list[Scalar], field: Field) -> list[Scalar]:
    z = field.zero()
    out = []
    for row in a:
        acc = z
        for x, y in zip(row, v):
            if x != z and y != z:
                acc = acc + x * y
        out.append(acc)
    return out


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def bareiss_rank(mat: Matrix, field: Field) -> int:
    """Rank by fraction-free elimination with full pivoting."""
    if not mat or not mat[0]:
        return 0
    m = [row[:] for row in mat]
    rows, cols = len(m), len(m[0])
    zero, prev = field.zero(), field.one()
    rank = 0
    for k in range(min(rows, cols)):
        piv = None
        for j in range(k, cols):
            for i in range(k, rows):
                if m[i][j] != zero:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        pi, pj = piv
        if pi != k:
            m[k], m[pi] = m[pi], m[k]
        if pj != k:
            for row in m:
                row[k], row[pj] = row[pj], row[k]
        pivot = m[k][k]
        for i in range(k + 1, rows):
            for j in range(k + 1, cols):
                m[i][j] = (pivot * m[i][j] - m[i][k] * m[k][j]) / prev
            m[i][k] = zero
        prev = pivot
        rank += 1
    return rank


def rref(mat: Matrix, field: Field) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form (unique) and the list of pivot columns."""
    if not mat or not mat[0]:
        return [row[:] for row in mat], []
    m = [row[:] for row in mat]
    rows, cols = len(m), len(m[0])
    zero = field.zero()
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if m[i][c] != zero:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != zero:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def nullspace(mat: Matrix, ncols: int, field: Field) -> list[list[Scalar]]:
    """Canonical kernel basis: one vector per free column, in column order."""
    zero, one = field.zero(), field.one()
    if not mat:
        return [[one if i == j else zero for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(mat, field)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for r, pc in enumerate(pivots):
            v[pc] = zero - red[r][f]
        basis.append(v)
    return basis


def row_space(mat: Matrix, field: Field) -> Matrix:
    """Canonical (RREF) basis of the row space, zero rows dropped."""
    red, pivots = rref(mat, field)
    return [red[i] for i in range(len(pivots))]


def solve(mat: Matrix, rhs: list[Scalar], field: Field) -> list[Scalar] | None:
    """One exact solution of mat * x = rhs (free variables 0), or None."""
    if not mat:
        return None if any(x != field.zero() for x in rhs) else []
    cols = len(mat[0])
    aug = [row[:] + [b] for row, b in zip(mat, rhs)]
    red, pivots = rref(aug, field)
    if cols in pivots:
        return None
    zero = field.zero()
    x = [zero] * cols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][cols]
    return x


def solve_columns(columns: list[list[Scalar]], rhs: list[Scalar],
                  field: Field) -> list[Scalar] | None:
    """Coordinates of rhs in the span of the given column vectors, or None."""
    if not columns:
        return None if any(x != field.zero() for x in rhs) else []
    mat = [[col[i] for col in columns] for i in range(len(rhs))]
    return solve(mat, rhs, field)


def in_span(rows: Matrix, v: list[Scalar], field: Field) -> bool:
    if not rows:
        return all(x == field.zero() for x in v)
    base = bareiss_rank(rows, field)
    return bareiss_rank(rows + [v], field) == base


def intersect_rowspaces(a: Matrix, b: Matrix, ncols: int, field: Field) -> Matrix:
    """Canonical basis of rowspace(a) & rowspace(b)."""
    if not a or not b:
        return []
    # x in both spans: x = u*a = w*b; kernel of [a^T | -b^T] gives (u, w)
    stacked = [[a[r][c] for r in range(len(a))]
               + [field.zero() - b[r][c] for r in range(len(b))]
               for c in range(ncols)]
    combos = nullspace(stacked, len(a) + len(b), field)
    vecs = []
    for combo in combos:
        v = [field.zero()] * ncols
        for r, coef in enumerate(combo[:len(a)]):
            if coef != field.zero():
                for c in range(ncols):
                    v[c] = v[c] + coef * a[r][c]
        vecs.append(v)
    return row_space(vecs, field) if vecs else []


def det(mat: Matrix, field: Field) -> Scalar:
    """Determinant by fraction-free elimination (square matrices only)."""
    n = len(mat)
    if n == 0:
        return field.one()
    m = [row[:] for row in mat]
    zero, prev = field.zero(), field.one()
    sign = 1
    for k in range(n - 1):
        piv = None
        for i in range(k, n):
            if m[i][k] != zero:
                piv = i
                break
        if piv is None:
            return zero
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (pivot * m[i][j] - m[i][k] * m[k][j]) / prev
            m[i][k] = zero
        prev = pivot
    d = m[n - 1][n - 1]
    return d if sign > 0 else zero - d
