"""Dense exact matrices as lists of rows.

Entries may be any exact field elements (``Fraction``, ``QuadraticNumber``);
multiplication also works over rings such as ``LaurentPoly`` and
``PolynomialQ``.  Nothing here ever rounds.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list  # list[list[scalar]]


def zeros(rows: int, cols: int | None = None) -> Matrix:
    cols = rows if cols is None else cols
    return [[Fraction(0)] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    m = zeros(n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def from_rows(rows: Sequence[Sequence]) -> Matrix:
    return [[x if not isinstance(x, int) else Fraction(x) for x in row] for row in rows]


def shape(m: Matrix) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def transpose(m: Matrix) -> Matrix:
    return [list(col) for col in zip(*m)]


def columns(m: Matrix) -> list[list]:
    return transpose(m)


def from_columns(cols: Sequence[Sequence]) -> Matrix:
    return transpose([list(c) for c in cols])


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if shape(a)[1] != shape(b)[0]:
        raise ValueError(f"shape mismatch {shape(a)} @ {shape(b)}")
    bt = transpose(b)
    out = []
    for row in a:
        out_row = []
        for col in bt:
            acc = 0
            for x, y in zip(row, col):
                if x != 0 and y != 0:
                    acc = acc + x * y
            out_row.append(acc if acc != 0 else Fraction(0))
        out.append(out_row)
    return out


def matvec(a: Matrix, v: Sequence) -> list:
    return [r[0] for r in matmul(a, [[x] for x in v])]


def add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]


def sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def scale(c, a: Matrix) -> Matrix:
    return [[c * x for x in r] for r in a]


def is_zero(m: Matrix) -> bool:
    return all(x == 0 for r in m for x in r)


def equal(a: Matrix, b: Matrix) -> bool:
    return shape(a) == shape(b) and all(x == y for r, s in zip(a, b) for x, y in zip(r, s))


def trace(m: Matrix):
    acc = Fraction(0)
    for i in range(len(m)):
        acc = acc + m[i][i]
    return acc


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return sub(matmul(a, b), matmul(b, a))


def power(m: Matrix, k: int) -> Matrix:
    result = identity(len(m))
    for _ in range(k):
        result = matmul(result, m)
    return result


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form over a field, with pivot columns."""
    a = from_rows(m)
    rows, cols = shape(a)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: Matrix) -> int:
    if not m or not m[0]:
        return 0
    return len(rref(m)[1])


def nullspace(m: Matrix) -> list[list]:
    """Basis of ``{x : m x = 0}``, one vector per free column."""
    rows, cols = shape(m)
    if rows == 0:
        return [[Fraction(int(i == j)) for i in range(cols)] for j in range(cols)]
    red, pivots = rref(m)
    basis = []
    for free in (c for c in range(cols) if c not in pivots):
        v = [Fraction(0)] * cols
        v[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -red[i][free]
        basis.append(v)
    return basis


def solve(m: Matrix, b: Sequence):
    """Unique solution of ``m x = b``; ``None`` when inconsistent.

    Raises ``ValueError`` when the solution is not unique.
    """
    rows, cols = shape(m)
    aug = [list(m[i]) + [b[i]] for i in range(rows)]
    red, pivots = rref(aug)
    if cols in pivots:
        return None
    if len(pivots) < cols:
        raise ValueError("linear system has no unique solution")
    x = [Fraction(0)] * cols
    for i, pc in enumerate(pivots):
        x[pc] = red[i][cols]
    return x


def inverse(m: Matrix) -> Matrix:
    n = len(m)
    aug = [list(m[i]) + identity(n)[i] for i in range(n)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red[:n]]


def det(m: Matrix):
    """Determinant by fraction-free Bareiss elimination (works over fields)."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    a = [list(r) for r in m]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            p = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if p is None:
                return Fraction(0)
            a[k], a[p] = a[p], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def coordinates(basis_columns: Sequence[Sequence], v: Sequence):
    """Coordinates of ``v`` in the span of ``basis_columns``; ``None`` if outside."""
    if not basis_columns:
        return [] if all(x == 0 for x in v) else None
    return solve(from_columns(basis_columns), v)


def block_diag(*blocks: Matrix) -> Matrix:
    n = sum(len(b) for b in blocks)
    out = zeros(n)
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(b)
    return out


def format_matrix(m: Matrix) -> str:
    cells = [[str(x) for x in r] for r in m]
    width = max((len(c) for r in cells for c in r), default=1)
    return "\n".join("[" + " ".join(c.rjust(width) for c in r) + "]" for r in cells)
