"""Exact rank, kernel and linear solve over Q.

Forward elimination is fraction-free (Bareiss) on rows scaled to integers;
only the final back-substitution to reduced row echelon form uses Fractions.
Pivot rule: columns left to right, first row (in the given order) with a
nonzero entry.  That makes kernels and particular solutions reproducible.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entries length must equal rows * cols")

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(Fraction(v) for r in rows for v in r))

    @classmethod
    def from_columns(cls, columns, rows):
        columns = [list(c) for c in columns]
        return cls.from_rows([[c[i] for c in columns] for i in range(rows)], len(columns))

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def matvec(self, v):
        return [sum((a * b for a, b in zip(self.row(i), v)), Fraction(0)) for i in range(self.rows)]

    def without_row(self, k):
        rows = self.to_rows()
        del rows[k]
        return RationalMatrix.from_rows(rows, self.cols)

    def vstack(self, other):
        if self.cols != other.cols:
            raise ValueError("column mismatch")
        return RationalMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)


def _integer_rows(rows):
    out = []
    for r in rows:
        den = lcm(*(v.denominator for v in r)) if r else 1
        out.append([int(v * den) for v in r])
    return out


def _bareiss(a, ncols, pivot_limit):
    """In-place fraction-free echelon form of integer rows ``a``.

    Pivots are only sought in columns < ``pivot_limit``.  Returns the list of
    pivot columns; pivot rows occupy the top of ``a``.
    """
    nrows = len(a)
    pivots = []
    prev = 1
    r = 0
    for c in range(pivot_limit):
        if r == nrows:
            break
        sel = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if sel is None:
            continue
        if sel != r:
            a[r], a[sel] = a[sel], a[r]
        piv = a[r][c]
        for i in range(r + 1, nrows):
            ai = a[i]
            f = ai[c]
            pr = a[r]
            for j in range(c + 1, ncols):
                ai[j] = (piv * ai[j] - f * pr[j]) // prev
            ai[c] = 0
        # rows above r keep their values; rows below are scaled minors
        prev = piv
        pivots.append(c)
        r += 1
    return pivots


def _rref(rows, ncols, pivot_limit=None):
    if pivot_limit is None:
        pivot_limit = ncols
    a = _integer_rows(rows)
    pivots = _bareiss(a, ncols, pivot_limit)
    red = [[Fraction(v) for v in a[k]] for k in range(len(pivots))]
    for k, c in enumerate(pivots):
        piv = red[k][c]
        red[k] = [v / piv for v in red[k]]
    for k in range(len(pivots) - 1, -1, -1):
        c = pivots[k]
        for i in range(k):
            f = red[i][c]
            if f:
                red[i] = [u - f * v for u, v in zip(red[i], red[k])]
    return red, pivots


def rank(M):
    if M.rows == 0 or M.cols == 0:
        return 0
    a = _integer_rows(M.to_rows())
    return len(_bareiss(a, M.cols, M.cols))


def determinant(M):
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    n = M.rows
    if n == 0:
        return Fraction(1)
    a = [list(r) for r in M.to_rows()]
    det = Fraction(1)
    for c in range(n):
        sel = next((i for i in range(c, n) if a[i][c] != 0), None)
        if sel is None:
            return Fraction(0)
        if sel != c:
            a[c], a[sel] = a[sel], a[c]
            det = -det
        piv = a[c][c]
        det *= piv
        for i in range(c + 1, n):
            f = a[i][c] / piv
            if f:
                a[i] = [u - f * v for u, v in zip(a[i], a[c])]
    return det


def kernel_basis(M):
    """Basis of {v : M v = 0}, one vector per free column, free entry 1."""
    n = M.cols
    if M.rows == 0:
        red, pivots = [], []
    else:
        red, pivots = _rref(M.to_rows(), n)
    pivset = set(pivots)
    basis = []
    for j in range(n):
        if j in pivset:
            continue
        v = [Fraction(0)] * n
        v[j] = Fraction(1)
        for k, c in enumerate(pivots):
            v[c] = -red[k][j]
        basis.append(v)
    return basis


def solve(M, b):
    """One solution of M v = b (free variables zero), or None if inconsistent."""
    if len(b) != M.rows:
        raise ValueError("right-hand side length must equal the row count")
    n = M.cols
    aug = [list(M.row(i)) + [Fraction(b[i])] for i in range(M.rows)]
    if not aug:
        return [Fraction(0)] * n
    red, pivots = _rref(aug, n + 1, pivot_limit=n + 1)
    if pivots and pivots[-1] == n:
        return None
    v = [Fraction(0)] * n
    for k, c in enumerate(pivots):
        v[c] = red[k][n]
    return v
