"""Dense exact linear algebra: rank, reduced echelon form, kernel bases.

Two backends behind one interface.  Rational matrices are reduced with
`Fraction` arithmetic in plain Python lists; prime-field matrices ride a
vectorized int64 kernel (entries stay below the modulus cap, so no product
can overflow).  Both use the same deterministic pivot rule: leftmost
unfinished column, topmost nonzero row.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .fields import PrimeField, RationalField


def _row_reduce_fp(a: np.ndarray, p: int, reduced: bool) -> tuple[np.ndarray, list[int]]:
    """Eliminate in place over F_p; returns the array and the pivot columns."""
    m, n = a.shape
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        nz = np.nonzero(a[row:, col])[0]
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            a[[row, piv]] = a[[piv, row]]
        inv = pow(int(a[row, col]), p - 2, p)
        if inv != 1:
            a[row] = a[row] * inv % p
        if reduced:
            targets = np.nonzero(a[:, col])[0]
            targets = targets[targets != row]
        else:
            targets = row + 1 + np.nonzero(a[row + 1:, col])[0]
        if targets.size:
            a[targets] = (a[targets] - np.outer(a[targets, col], a[row])) % p
        pivots.append(col)
        row += 1
    return a, pivots


def _row_reduce_q(rows: list[list[Fraction]], reduced: bool) -> tuple[list[list[Fraction]], list[int]]:
    """Eliminate in place over Q; returns the rows and the pivot columns."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        piv = next((i for i in range(row, m) if rows[i][col] != 0), None)
        if piv is None:
            continue
        if piv != row:
            rows[row], rows[piv] = rows[piv], rows[row]
        lead = rows[row][col]
        if lead != 1:
            rows[row] = [x / lead for x in rows[row]]
        span = range(m) if reduced else range(row + 1, m)
        for i in span:
            if i != row and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[row])]
        pivots.append(col)
        row += 1
    return rows, pivots


def rank_fp_array(a: np.ndarray, p: int) -> int:
    """Rank of an int64 array taken mod p (forward elimination only)."""
    _, pivots = _row_reduce_fp(a.copy(), p, reduced=False)
    return len(pivots)


@dataclass(frozen=True)
class ExactMatrix:
    """A dense matrix over Q or F_p with row-major entries.

    Entries are raw field elements (Fractions or reduced ints); the field
    object records which.  Instances are immutable and hashable.
    """

    field: object
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, field, data) -> "ExactMatrix":
        """Build a matrix coercing every entry into ``field``."""
        data = [list(r) for r in data]
        rows = len(data)
        cols = len(data[0]) if rows else 0
        if any(len(r) != cols for r in data):
            raise ValueError("ragged rows")
        entries = tuple(field.convert(x) for r in data for x in r)
        return cls(field, rows, cols, entries)

    @classmethod
    def identity(cls, field, n: int) -> "ExactMatrix":
        one, zero = field.one, field.zero
        entries = tuple(one if i == j else zero for i in range(n) for j in range(n))
        return cls(field, n, n, entries)

    @classmethod
    def zeros(cls, field, rows: int, cols: int) -> "ExactMatrix":
        return cls(field, rows, cols, (field.zero,) * (rows * cols))

    def at(self, i: int, j: int):
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "ExactMatrix":
        entries = tuple(
            self.entries[i * self.cols + j]
            for j in range(self.cols)
            for i in range(self.rows)
        )
        return ExactMatrix(self.field, self.cols, self.rows, entries)

    def _array(self) -> np.ndarray:
        a = np.fromiter(self.entries, dtype=np.int64, count=self.rows * self.cols)
        return a.reshape(self.rows, self.cols)

    def _reduce(self, reduced: bool) -> tuple[list[list], list[int]]:
        if isinstance(self.field, PrimeField):
            arr, pivots = _row_reduce_fp(self._array(), self.field.p, reduced)
            return arr.tolist(), pivots
        if isinstance(self.field, RationalField):
            return _row_reduce_q(self.to_rows(), reduced)
        raise TypeError(f"unsupported field {self.field!r}")

    def rank(self) -> int:
        _, pivots = self._reduce(reduced=False)
        return len(pivots)

    def rref(self) -> "ExactMatrix":
        rows, _ = self._reduce(reduced=True)
        entries = tuple(x for r in rows for x in r)
        return ExactMatrix(self.field, self.rows, self.cols, entries)

    def kernel_basis(self) -> list[tuple]:
        """Basis of the right kernel, each vector's first nonzero entry scaled to 1.

        Vectors are ordered by their free column, so output is canonical.
        """
        rows, pivots = self._reduce(reduced=True)
        f = self.field
        pivot_set = set(pivots)
        basis = []
        for free in range(self.cols):
            if free in pivot_set:
                continue
            v = [f.zero] * self.cols
            v[free] = f.one
            for i, pc in enumerate(pivots):
                coef = rows[i][free]
                if coef != f.zero:
                    v[pc] = f.neg(coef)
            lead = next(j for j in range(self.cols) if v[j] != f.zero)
            if v[lead] != f.one:
                scale = f.inv(v[lead])
                v = [f.mul(scale, x) for x in v]
            basis.append(tuple(v))
        assert len(basis) == self.cols - len(pivots)  # rank-nullity
        return basis


def rank(m: ExactMatrix) -> int:
    return m.rank()


def rref(m: ExactMatrix) -> ExactMatrix:
    return m.rref()


def kernel_basis(m: ExactMatrix) -> list[tuple]:
    return m.kernel_basis()
