"""Exact sparse linear algebra over cyclotomic scalars.

Rows are dicts mapping column index to a nonzero scalar.  The workhorse is an
incremental row-echelon accumulator with deterministic pivoting (smallest
column index, rows normalized monic at the pivot), from which ranks, kernels
and row-space comparisons are derived.  Pivot division costs nothing on the
plus/minus-one dominated systems this library produces.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .scalars import ONE, ZERO, CyclotomicScalar


Row = dict  # column index -> nonzero CyclotomicScalar


class RowReducer:
    """Incremental sparse row-echelon form with monic pivots."""

    def __init__(self):
        self.pivots: dict[int, Row] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce_row(self, row: Row) -> Row:
        """Return a copy of row reduced against the current pivot rows."""
        row = dict(row)
        while row:
            c = min(row)
            piv = self.pivots.get(c)
            if piv is None:
                break
            f = row.pop(c)
            for k, v in piv.items():
                if k == c:
                    continue
                acc = row.get(k)
                acc = -f * v if acc is None else acc - f * v
                if acc.is_zero():
                    row.pop(k, None)
                else:
                    row[k] = acc
        return row

    def insert(self, row: Row):
        """Reduce row and adopt it as a new pivot row; returns the pivot
        column, or None if the row was dependent."""
        row = self.reduce_row(row)
        if not row:
            return None
        c = min(row)
        inv = row[c].inverse()
        self.pivots[c] = {k: v * inv for k, v in row.items()}
        return c

    def rref(self) -> dict[int, Row]:
        """Fully back-substituted pivot rows (reduced row-echelon form)."""
        cols = sorted(self.pivots, reverse=True)
        out: dict[int, Row] = {}
        for c in cols:
            row = dict(self.pivots[c])
            for k in [k for k in row if k != c and k in out]:
                f = row.pop(k)
                for kk, vv in out[k].items():
                    if kk == k:
                        continue
                    acc = row.get(kk)
                    acc = -f * vv if acc is None else acc - f * vv
                    if acc.is_zero():
                        row.pop(kk, None)
                    else:
                        row[kk] = acc
            out[c] = row
        return out

    def kernel(self, ncols: int) -> list[list[CyclotomicScalar]]:
        """Basis of the solution space of (all inserted rows) . x = 0."""
        rref = self.rref()
        free_cols = [c for c in range(ncols) if c not in rref]
        basis = []
        for f in free_cols:
            vec = [ZERO] * ncols
            vec[f] = ONE
            for p, row in rref.items():
                coef = row.get(f)
                if coef is not None:
                    vec[p] = -coef
            basis.append(vec)
        return basis


@dataclass
class ExactMatrix:
    """Sparse matrix with cyclotomic entries; absent entries are zero."""

    rows: int
    cols: int
    entries: dict = field(default_factory=dict)  # (row, col) -> scalar

    @classmethod
    def from_dense(cls, dense) -> "ExactMatrix":
        entries = {}
        for i, row in enumerate(dense):
            for j, v in enumerate(row):
                if not v.is_zero():
                    entries[(i, j)] = v
        return cls(len(dense), len(dense[0]) if dense else 0, entries)

    def row_dicts(self) -> list[Row]:
        rows: list[Row] = [dict() for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows

    def apply(self, vec: list[CyclotomicScalar]) -> list[CyclotomicScalar]:
        out = [ZERO] * self.rows
        for (i, j), v in self.entries.items():
            if vec[j]:
                out[i] = out[i] + v * vec[j]
        return out


def kernel_basis(matrix: ExactMatrix) -> list[list[CyclotomicScalar]]:
    """Basis of the right null space of the matrix, exact."""
    red = RowReducer()
    for row in matrix.row_dicts():
        if row:
            red.insert(row)
    return red.kernel(matrix.cols)


def matrix_rank(matrix: ExactMatrix) -> int:
    red = RowReducer()
    for row in matrix.row_dicts():
        if row:
            red.insert(row)
    return red.rank


def rows_rank(rows) -> int:
    red = RowReducer()
    for row in rows:
        if row:
            red.insert(row)
    return red.rank


def same_span(rows_a, rows_b) -> bool:
    """Whether two families of sparse rows span the same subspace, exactly."""
    rows_a = list(rows_a)
    rows_b = list(rows_b)
    ra = rows_rank(rows_a)
    rb = rows_rank(rows_b)
    if ra != rb:
        return False
    return rows_rank(rows_a + rows_b) == ra
