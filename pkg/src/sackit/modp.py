"""Dense exact linear algebra over a prime field.

Matrices are lists of rows of Python ints reduced into [0, p).  Pivot
selection is lexicographic (first usable column, first usable row), so
reduced forms, ranks, kernel bases and greedy span completions are
deterministic functions of the input.  Everything is arbitrary-precision
integer arithmetic; inverses come from pow(x, -1, p).
"""

from __future__ import annotations


def rref(rows, p):
    """Reduced row echelon form.  Returns (reduced nonzero rows, pivot columns)."""
    mat = [[x % p for x in row] for row in rows]
    pivots = []
    r = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        pivot = None
        for i in range(r, len(mat)):
            if mat[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = pow(mat[r][col], -1, p)
        mat[r] = [(x * inv) % p for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                f = mat[i][col]
                mat[i] = [(a - f * b) % p for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
    return mat[:r], pivots


def rank(rows, p) -> int:
    return len(rref(rows, p)[1])


def kernel_basis(rows, ncols, p):
    """Canonical null-space basis of the matrix given by ``rows``.

    One basis vector per free column, in increasing free-column order; the
    vector has 1 at its free column and the negated reduced column at the
    pivot positions.
    """
    reduced, pivots = rref(rows, p)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [0] * ncols
        vec[free] = 1
        for row, pcol in zip(reduced, pivots):
            if row[free]:
                vec[pcol] = (-row[free]) % p
        basis.append(vec)
    return basis


def solve(rows, rhs, p):
    """One solution of rows * x = rhs, or None if inconsistent."""
    if not rows:
        return None
    ncols = len(rows[0])
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    reduced, pivots = rref(aug, p)
    sol = [0] * ncols
    for row, pcol in zip(reduced, pivots):
        if pcol == ncols:
            return None  # pivot in the constant column
        sol[pcol] = row[ncols]
    return sol


class Span:
    """Incrementally built row space with membership tests.

    Rows are kept in echelon form indexed by leading column; adding reduces
    the candidate against current rows first, so the span is independent of
    insertion order while the add() return value reports growth.
    """

    def __init__(self, ncols: int, p: int):
        self.ncols = ncols
        self.p = p
        self.rows: dict[int, list[int]] = {}

    def _reduce(self, vec):
        v = [x % self.p for x in vec]
        for lead in sorted(self.rows):
            if v[lead]:
                f = v[lead]
                row = self.rows[lead]
                v = [(a - f * b) % self.p for a, b in zip(v, row)]
        return v

    def add(self, vec) -> bool:
        """Insert vec; True when it enlarged the span."""
        v = self._reduce(vec)
        lead = next((i for i, x in enumerate(v) if x), None)
        if lead is None:
            return False
        inv = pow(v[lead], -1, self.p)
        self.rows[lead] = [(x * inv) % self.p for x in v]
        return True

    def contains(self, vec) -> bool:
        return all(x == 0 for x in self._reduce(vec))

    @property
    def dim(self) -> int:
        return len(self.rows)
