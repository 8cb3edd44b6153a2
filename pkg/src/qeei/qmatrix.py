"""Dense quaternion matrices and the 4n x 4n real lift.

Matrices are immutable after construction.  Raw element access uses
Python's 0-based indexing; the operations that mirror textbook notation
(minor, natural_submatrix) take 1-based indices, as does the CLI.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, IndexOutOfRange, NotHermitian, NotSquare
from .quat import Quaternion, _coerce


class QMatrix:
    """Row-major dense matrix over the quaternions."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        if not rows or not rows[0]:
            raise DimensionMismatch("matrix must have at least one row and column")
        width = len(rows[0])
        for row in rows:
            if len(row) != width:
                raise DimensionMismatch("ragged rows")
        object.__setattr__(self, "rows",
                           tuple(tuple(_coerce(v) for v in row) for row in rows))

    @property
    def n_rows(self):
        return len(self.rows)

    @property
    def n_cols(self):
        return len(self.rows[0])

    @property
    def shape(self):
        return (self.n_rows, self.n_cols)

    def is_square(self):
        return self.n_rows == self.n_cols

    def __getitem__(self, pq):
        p, q = pq
        return self.rows[p][q]

    def __eq__(self, other):
        return isinstance(other, QMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"add {self.shape} vs {other.shape}")
        return QMatrix([[a + b for a, b in zip(ra, rb)]
                        for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"sub {self.shape} vs {other.shape}")
        return QMatrix([[a - b for a, b in zip(ra, rb)]
                        for ra, rb in zip(self.rows, other.rows)])

    def __neg__(self):
        return QMatrix([[-a for a in row] for row in self.rows])

    def norm_inf(self):
        """Max entry modulus."""
        return max(a.modulus() for row in self.rows for a in row)

    def column(self, q):
        return [row[q] for row in self.rows]

    def components(self):
        """Split into the four real component matrices (A0, A1, A2, A3)."""
        comps = [np.empty(self.shape) for _ in range(4)]
        for p, row in enumerate(self.rows):
            for q, a in enumerate(row):
                comps[0][p, q] = a.w
                comps[1][p, q] = a.x
                comps[2][p, q] = a.y
                comps[3][p, q] = a.z
        return tuple(comps)

    def isclose(self, other, tol=1e-10):
        return (self.shape == other.shape
                and all(a.isclose(b, tol) for ra, rb in zip(self.rows, other.rows)
                        for a, b in zip(ra, rb)))

    def __str__(self):
        return "\n".join("[" + ", ".join(str(a) for a in row) + "]"
                         for row in self.rows)

    __repr__ = __str__


@dataclass(frozen=True)
class HermitianQMatrix:
    """Wrapper certifying A = A*; construct through validate_hermitian."""

    inner: QMatrix

    @property
    def n(self):
        return self.inner.n_rows

    def __getitem__(self, pq):
        return self.inner[pq]


def zeros(n_rows, n_cols=None):
    n_cols = n_rows if n_cols is None else n_cols
    return QMatrix([[Quaternion()] * n_cols for _ in range(n_rows)])


def identity(n):
    return QMatrix([[Quaternion(1.0 if p == q else 0.0) for q in range(n)]
                    for p in range(n)])


def from_components(A0, A1, A2, A3):
    """Assemble A = A0 + A1 i + A2 j + A3 k from four real matrices."""
    mats = [np.asarray(m, dtype=float) for m in (A0, A1, A2, A3)]
    if any(m.shape != mats[0].shape for m in mats) or mats[0].ndim != 2:
        raise DimensionMismatch("component matrices must share an m x n shape")
    m, n = mats[0].shape
    return QMatrix([[Quaternion(mats[0][p, q], mats[1][p, q],
                                mats[2][p, q], mats[3][p, q])
                     for q in range(n)] for p in range(m)])


def matmul(A: QMatrix, B: QMatrix) -> QMatrix:
    if A.n_cols != B.n_rows:
        raise DimensionMismatch(f"matmul {A.shape} x {B.shape}")
    Bt = list(zip(*B.rows))
    out = []
    for row in A.rows:
        out.append([_dot(row, col) for col in Bt])
    return QMatrix(out)


def _dot(row, col):
    acc = Quaternion()
    for a, b in zip(row, col):
        acc = acc + a * b
    return acc


def conj_transpose(A: QMatrix) -> QMatrix:
    return QMatrix([[A[p, q].conj() for p in range(A.n_rows)]
                    for q in range(A.n_cols)])


def scale_right(v: QMatrix, q) -> QMatrix:
    """Entrywise right multiplication by q (order matters)."""
    q = _coerce(q)
    return QMatrix([[a * q for a in row] for row in v.rows])


def scale_left(q, v: QMatrix) -> QMatrix:
    q = _coerce(q)
    return QMatrix([[q * a for a in row] for row in v.rows])


def validate_hermitian(A: QMatrix, tol_factor=1e-12) -> HermitianQMatrix:
    """Certify A = A*; tolerance scales with the largest entry modulus."""
    if not A.is_square():
        raise NotSquare(f"Hermitian validation needs a square matrix, got {A.shape}")
    tol = tol_factor * (1.0 + A.norm_inf())
    worst = (0.0, 0, 0)
    for p in range(A.n_rows):
        for q in range(p, A.n_cols):
            dev = _deviation(A[p, q], A[q, p].conj())
            if dev > worst[0]:
                worst = (dev, p, q)
    if worst[0] > tol:
        dev, p, q = worst
        raise NotHermitian(
            f"entries ({p + 1},{q + 1})/({q + 1},{p + 1}) break A = A* "
            f"by {dev:.3e} (tol {tol:.3e})",
            row=p + 1, col=q + 1, deviation=dev)
    return HermitianQMatrix(A)


def _deviation(a: Quaternion, b: Quaternion) -> float:
    return max(abs(x - y) for x, y in zip(a.components(), b.components()))


def minor(A: HermitianQMatrix, j: int) -> HermitianQMatrix:
    """M_j: drop row j and column j (1-based), order preserved."""
    n = A.n
    if n < 2:
        raise IndexOutOfRange("minor needs n >= 2")
    if not 1 <= j <= n:
        raise IndexOutOfRange(f"minor index {j} outside 1..{n}")
    keep = [p for p in range(n) if p != j - 1]
    sub = QMatrix([[A.inner[p, q] for q in keep] for p in keep])
    return HermitianQMatrix(sub)


def natural_submatrix(A: QMatrix, i: int, j: int) -> QMatrix:
    """A_ij: drop row i and column j (1-based), then rearrange.

    After the deletion, surviving row j is moved to the front and surviving
    column i is moved to the front; all other rows and columns keep their
    ascending order.  For i = j both moves are vacuous and the result is
    the plain deletion minor.  This is the convention under which the
    adjugate built from row expansions satisfies
    qadj(H) H = H qadj(H) = det(H) E on Hermitian matrices (validated
    numerically for n = 2..6 in the test suite); it was fixed by solving
    qadj(H) = det(H) inv(H) entrywise on random Hermitian matrices and
    searching over row/column orderings.
    """
    n = A.n_rows
    if not A.is_square():
        raise NotSquare("natural submatrix needs a square matrix")
    if n < 2:
        raise IndexOutOfRange("natural submatrix needs n >= 2")
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexOutOfRange(f"indices ({i},{j}) outside 1..{n}")
    row_order, col_order = natural_orders(n, i, j)
    return QMatrix([[A[r - 1, c - 1] for c in col_order] for r in row_order])


def natural_orders(n, i, j):
    """1-based (row_order, col_order) of the natural submatrix A_ij."""
    row_order = [r for r in range(1, n + 1) if r != i and r != j]
    col_order = [c for c in range(1, n + 1) if c != j and c != i]
    if i != j:
        row_order.insert(0, j)
        col_order.insert(0, i)
    return row_order, col_order


def real_lift(A: QMatrix) -> np.ndarray:
    """The 4n x 4n real block representation; a multiplicative homomorphism."""
    A0, A1, A2, A3 = A.components()
    return np.block([
        [A0, A1, A2, A3],
        [-A1, A0, -A3, A2],
        [-A2, A3, A0, -A1],
        [-A3, -A2, A1, A0],
    ])


def from_real_lift(L: np.ndarray) -> QMatrix:
    """Inverse of real_lift on its image (reads the first block row)."""
    m = L.shape[0]
    if L.ndim != 2 or L.shape[1] != m or m % 4:
        raise DimensionMismatch("lift must be square with side divisible by 4")
    n = m // 4
    return from_components(L[:n, :n], L[:n, n:2 * n],
                           L[:n, 2 * n:3 * n], L[:n, 3 * n:])
