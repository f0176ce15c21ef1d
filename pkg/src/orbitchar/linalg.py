"""Small dense exact linear algebra over Fraction."""

from __future__ import annotations

from fractions import Fraction

Q = Fraction

Vector = tuple[Q, ...]
Matrix = list[list[Q]]


def to_matrix(rows) -> Matrix:
    """Copy rows into a mutable Fraction matrix."""
    return [[Q(x) for x in row] for row in rows]


def identity(n: int) -> Matrix:
    return [[Q(1) if i == j else Q(0) for j in range(n)] for i in range(n)]


def matvec(a, v) -> Vector:
    """Matrix times column vector."""
    return tuple(sum((Q(x) * Q(y) for x, y in zip(row, v)), Q(0)) for row in a)


def matmul(a, b) -> Matrix:
    n, k, m = len(a), len(b), len(b[0])
    out = [[Q(0)] * m for _ in range(n)]
    for i in range(n):
        for t in range(k):
            x = Q(a[i][t])
            if x:
                row = b[t]
                oi = out[i]
                for j in range(m):
                    oi[j] += x * Q(row[j])
    return out


def transpose(a) -> Matrix:
    return [list(col) for col in zip(*a)]


def rank(rows) -> int:
    """Rank of a matrix by exact Gaussian elimination."""
    a = to_matrix(rows)
    if not a or not a[0]:
        return 0
    m, n = len(a), len(a[0])
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if a[i][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = Q(1) / a[r][col]
        a[r] = [x * inv for x in a[r]]
        for i in range(m):
            if i != r and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == m:
            break
    return r


def solve(a, b) -> list[Q] | None:
    """One exact solution of a x = b (free variables set to 0), or None if inconsistent."""
    m = len(a)
    n = len(a[0]) if m else 0
    aug = [list(map(Q, row)) + [Q(bi)] for row, bi in zip(a, b)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if aug[i][col]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = Q(1) / aug[r][col]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append((r, col))
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n]:
            return None
    x = [Q(0)] * n
    for row, col in pivots:
        x[col] = aug[row][n]
    return x


def inverse(a) -> Matrix:
    """Exact inverse; raises ValueError on a singular matrix."""
    n = len(a)
    aug = [list(map(Q, row)) + ident_row for row, ident_row in zip(a, identity(n))]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col]), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Q(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]
