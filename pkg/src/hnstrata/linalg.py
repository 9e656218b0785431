"""Exact integer/rational linear algebra on tuples.

Vectors are tuples, matrices are tuples of row tuples.  Everything here is
exact: entries are ``int`` or ``fractions.Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence, Tuple

Vector = Tuple
Matrix = Tuple[Tuple, ...]


def frac_vec(v) -> Tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in v)


def canon(x):
    """Integral fractions collapse to ``int`` so that keys compare cleanly."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    return x


def canon_vec(v) -> tuple:
    return tuple(canon(x) for x in v)


def dot(a: Sequence, b: Sequence):
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return sum((x * y for x, y in zip(a, b)), 0)


def add(a, b) -> tuple:
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return tuple(x + y for x, y in zip(a, b))


def sub(a, b) -> tuple:
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return tuple(x - y for x, y in zip(a, b))


def scale(c, a) -> tuple:
    return tuple(c * x for x in a)


def lincomb(coeffs: Sequence, vectors: Sequence[Sequence], dim: int) -> tuple:
    out = [0] * dim
    for c, v in zip(coeffs, vectors):
        if c:
            for k, x in enumerate(v):
                out[k] += c * x
    return tuple(out)


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(m: Matrix, ncols: Optional[int] = None) -> Matrix:
    if not m:
        return tuple(() for _ in range(ncols or 0))
    return tuple(zip(*m))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matvec(m: Matrix, v: Sequence) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def solve(m: Sequence[Sequence], b: Sequence) -> Optional[Tuple[Fraction, ...]]:
    """Solve ``m x = b`` exactly for ``m`` of full column rank.

    Returns ``None`` when the system is inconsistent.  Raises ``ValueError``
    if the columns of ``m`` are dependent (the solution would not be unique).
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if len(b) != rows:
        raise ValueError("dimension mismatch")
    if cols == 0:
        return () if all(x == 0 for x in b) else None
    aug = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(m, b)]
    r = 0
    pivots = []
    for c in range(cols):
        p = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if p is None:
            raise ValueError("columns are linearly dependent")
        aug[r], aug[p] = aug[p], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    if any(aug[i][cols] != 0 for i in range(r, rows)):
        return None
    return tuple(aug[i][cols] for i in range(cols))


def coefficients_in_basis(basis: Sequence[Sequence], v: Sequence) -> Optional[Tuple[Fraction, ...]]:
    """Coordinates of ``v`` in the linearly independent family ``basis``.

    ``None`` if ``v`` is outside the rational span.
    """
    if not basis:
        return () if all(x == 0 for x in v) else None
    return solve(transpose(tuple(tuple(b) for b in basis)), v)


def rank(m: Sequence[Sequence]) -> int:
    rows = [[Fraction(x) for x in row] for row in m]
    if not rows:
        return 0
    cols = len(rows[0])
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        for i in range(r + 1, len(rows)):
            if rows[i][c] != 0:
                f = rows[i][c] / rows[r][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def inverse(m: Sequence[Sequence]) -> Matrix:
    n = len(m)
    cols = [solve(m, e) for e in identity(n)]
    if any(c is None for c in cols):
        raise ValueError("matrix is singular")
    return transpose(tuple(cols))


def determinant(m: Sequence[Sequence]) -> Fraction:
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] / a[c][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


def int_inverse(m: Matrix) -> Matrix:
    """Inverse of a unimodular integer matrix, as integers."""
    inv = inverse(m)
    out = []
    for row in inv:
        if any(x.denominator != 1 for x in row):
            raise ValueError("matrix is not unimodular")
        out.append(tuple(int(x) for x in row))
    return tuple(out)


def smith_normal_form(b: Sequence[Sequence[int]]):
    """Smith normal form ``U @ b @ V = D`` of an integer ``n x k`` matrix.

    Returns ``(U, D, V)`` with ``U``, ``V`` unimodular and ``D`` diagonal with
    nonnegative entries ``d_0 | d_1 | ...``.
    """
    n = len(b)
    k = len(b[0]) if n else 0
    a = [list(map(int, row)) for row in b]
    u = [list(r) for r in identity(n)]
    v = [list(r) for r in identity(k)]

    def row_op(i, j, q):  # row_i -= q row_j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):  # col_i -= q col_j
        for row in a:
            row[i] -= q * row[j]
        for row in v:
            row[i] -= q * row[j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    for t in range(min(n, k)):
        while True:
            entries = [(abs(a[i][j]), i, j) for i in range(t, n) for j in range(t, k) if a[i][j] != 0]
            if not entries:
                break
            _, pi, pj = min(entries)
            swap_rows(t, pi)
            swap_cols(t, pj)
            done = True
            for i in range(t + 1, n):
                if a[i][t]:
                    row_op(i, t, a[i][t] // a[t][t])
                    if a[i][t]:
                        done = False
            for j in range(t + 1, k):
                if a[t][j]:
                    col_op(j, t, a[t][j] // a[t][t])
                    if a[t][j]:
                        done = False
            if not done:
                continue
            bad = next(
                ((i, j) for i in range(t + 1, n) for j in range(t + 1, k) if a[i][j] % a[t][t]),
                None,
            )
            if bad is None:
                break
            # fold the offending row into the pivot row and go again
            a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
            u[t] = [x + y for x, y in zip(u[t], u[bad[0]])]
        if t < n and t < k and a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return (
        tuple(map(tuple, u)),
        tuple(map(tuple, a)),
        tuple(map(tuple, v)),
    )


def hermite_rows(rows: Sequence[Sequence[int]]) -> Matrix:
    """Row-style Hermite normal form of a full-row-rank integer matrix.

    The row lattice is unchanged; pivots are positive and entries above a
    pivot are reduced into ``[0, pivot)``.
    """
    a = [list(map(int, r)) for r in rows]
    m = len(a)
    if m == 0:
        return ()
    cols = len(a[0])
    r = 0
    for c in range(cols):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if a[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(a[i][c]))
            a[r], a[p] = a[p], a[r]
            others = [i for i in range(r + 1, m) if a[i][c] != 0]
            if not others:
                break
            for i in others:
                q = a[i][c] // a[r][c]
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
        if a[r][c] == 0:
            continue
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
        for i in range(r):
            q = a[i][c] // a[r][c]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
        r += 1
    return tuple(map(tuple, a))
