"""Exact linear algebra over Fraction matrices (lists of rows).

Everything here is plain fraction-exact Gaussian elimination; no pivoting
heuristics are needed since there is no rounding.  The symmetric-signature
routine diagonalizes by congruence (Schur complements plus the hyperbolic
row/column trick for zero diagonals) and never computes eigenvalues.
"""

from __future__ import annotations

from fractions import Fraction

Matrix = list[list[Fraction]]
Vector = list[Fraction]


def to_fractions(rows) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def mat_vec(a: Matrix, x: Vector) -> Vector:
    return [sum((v * w for v, w in zip(row, x)), Fraction(0)) for row in a]


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return len(a) == len(b) and all(ra == rb for ra, rb in zip(a, b))


def rref(a) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form (a copy) and its pivot columns."""
    m = to_fractions(a)
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        d = m[r][c]
        if d != 1:
            m[r] = [x / d for x in m[r]]
        for i in range(rows):
            f = m[i][c]
            if i != r and f:
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a) -> int:
    return len(rref(a)[1])


def nullspace(a, cols: int | None = None) -> list[Vector]:
    """Basis of {x : a x = 0}; ``cols`` is needed only when a has no rows."""
    if not a:
        return [
            [Fraction(int(i == j)) for j in range(cols or 0)] for i in range(cols or 0)
        ]
    r, pivots = rref(a)
    ncols = len(r[0])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -r[i][f]
        basis.append(v)
    return basis


class LinearSolver:
    """Eliminates a fixed matrix once, then solves A x = b repeatedly.

    Requires nothing of A up front; ``solve`` returns None when b is not
    in the column space, and the unique solution when A has full column
    rank (the only case the callers use).
    """

    def __init__(self, a):
        m = to_fractions(a)
        self.rows = len(m)
        self.cols = len(m[0]) if self.rows else 0
        # eliminate [A | I]; pivots restricted to A's columns
        for i, row in enumerate(m):
            row.extend(Fraction(int(j == i)) for j in range(self.rows))
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            pivot = next((i for i in range(r, self.rows) if m[i][c]), None)
            if pivot is None:
                continue
            m[r], m[pivot] = m[pivot], m[r]
            d = m[r][c]
            if d != 1:
                m[r] = [x / d for x in m[r]]
            for i in range(self.rows):
                f = m[i][c]
                if i != r and f:
                    m[i] = [x - f * y for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        self.pivots = pivots
        self.rank = len(pivots)
        self.transform = [row[self.cols:] for row in m]

    def solve(self, b: Vector) -> Vector | None:
        c = mat_vec(self.transform, b)
        for i in range(self.rank, self.rows):
            if c[i]:
                return None
        x = [Fraction(0)] * self.cols
        for i, pc in enumerate(self.pivots):
            x[pc] = c[i]
        return x


def symmetric_signature(s) -> tuple[int, int, int]:
    """Signature (pos, neg, zero) of a symmetric matrix, by congruence.

    Repeatedly takes a Schur complement at a nonzero diagonal pivot; when
    the active diagonal is all zero but some off-diagonal entry s_ij is
    not, adding row/column j to row/column i manufactures the pivot
    2*s_ij (a congruence, so the signature is unchanged).
    """
    a = to_fractions(s)
    n = len(a)
    for i, row in enumerate(a):
        if len(row) != n:
            raise ValueError("matrix must be square")
    active = list(range(n))
    pos = neg = 0
    while active:
        k = next((i for i in active if a[i][i]), None)
        if k is None:
            hyper = None
            for i in active:
                for j in active:
                    if j > i and a[i][j]:
                        hyper = (i, j)
                        break
                if hyper:
                    break
            if hyper is None:
                break  # remaining block is identically zero
            i, j = hyper
            for c in active:
                a[i][c] += a[j][c]
            for r in active:
                a[r][i] += a[r][j]
            continue
        d = a[k][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(k)
        pivot_row = a[k]
        for i in active:
            f = a[i][k]
            if f:
                f /= d
                row = a[i]
                for j in active:
                    if pivot_row[j]:
                        row[j] -= f * pivot_row[j]
                row[k] = Fraction(0)
    return pos, neg, n - pos - neg
