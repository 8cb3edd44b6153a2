"""Permutation determinants over the quaternions.

Two permutation sums live here.  Both attach the classical sign
(-1)**(n - #cycles) to each permutation, but they order the factors of a
term differently, and over a non-commutative ring that changes the value:

* det: each cycle is traversed starting from its largest element, and
  cycles are concatenated in order of decreasing leader.
* row expansion |A|^row: the first factor comes from row 1 and the chain
  follows the permutation; when a cycle closes, the next factor comes
  from the smallest row not yet used.

The quaternion adjugate qadj is built from row expansions of natural
submatrices and satisfies qadj(H) H = H qadj(H) = det(H) E for
Hermitian H.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import qmatrix
from .errors import ComplexityLimit, IndexOutOfRange, NotSquare
from .quat import Quaternion, _coerce
from .qmatrix import HermitianQMatrix, QMatrix, natural_submatrix

MAX_FACTORIAL_DIM = 8


@dataclass(frozen=True)
class CycleDecomposition:
    """Cycles of a permutation (1-based), ordered for one of the two sums."""

    cycles: tuple
    sign: int

    @staticmethod
    def det_normal_form(perm):
        """Each cycle led by its largest element; leaders descending."""
        cycles = _raw_cycles(perm)
        ordered = []
        for cyc in cycles:
            top = cyc.index(max(cyc))
            ordered.append(tuple(cyc[top:] + cyc[:top]))
        ordered.sort(key=lambda c: -c[0])
        return CycleDecomposition(tuple(ordered), _cycle_sign(len(perm), len(cycles)))

    @staticmethod
    def row_expansion_form(perm):
        """Each cycle led by its smallest element; leaders ascending."""
        cycles = _raw_cycles(perm)
        ordered = []
        for cyc in cycles:
            low = cyc.index(min(cyc))
            ordered.append(tuple(cyc[low:] + cyc[:low]))
        ordered.sort(key=lambda c: c[0])
        return CycleDecomposition(tuple(ordered), _cycle_sign(len(perm), len(cycles)))

    def factor_rows(self):
        """Row visit order of the term's factors."""
        return [r for cyc in self.cycles for r in cyc]


def _raw_cycles(perm):
    """perm is 0-based (perm[r] = image of r); cycles returned 1-based."""
    n = len(perm)
    seen = [False] * n
    cycles = []
    for start in range(n):
        if seen[start]:
            continue
        cyc = []
        r = start
        while not seen[r]:
            seen[r] = True
            cyc.append(r + 1)
            r = perm[r]
        cycles.append(cyc)
    return cycles


def _cycle_sign(n, n_cycles):
    return -1 if (n - n_cycles) % 2 else 1


def _permutation_sum(A: QMatrix, form):
    n = A.n_rows
    if not A.is_square():
        raise NotSquare(f"determinant needs a square matrix, got {A.shape}")
    if n > MAX_FACTORIAL_DIM:
        raise ComplexityLimit(
            f"n = {n} exceeds the factorial-sum cap n <= {MAX_FACTORIAL_DIM}")
    total = Quaternion()
    for perm in itertools.permutations(range(n)):
        decomp = form(perm)
        term = Quaternion(float(decomp.sign))
        for r in decomp.factor_rows():
            term = term * A[r - 1, perm[r - 1]]
        total = total + term
    return total


def det(A: QMatrix) -> Quaternion:
    """Permutation determinant with descending-cycle-leader factor order."""
    return _permutation_sum(A, CycleDecomposition.det_normal_form)


def row_expansion(A: QMatrix) -> Quaternion:
    """|A|^row: factor order chains through the permutation from row 1."""
    return _permutation_sum(A, CycleDecomposition.row_expansion_form)


def qadj(A: QMatrix) -> QMatrix:
    """Quaternion adjugate: signed row expansions of natural submatrices.

    Entry (p, q) is +|A_pp|^row on the diagonal and -|A_qp|^row off it.
    The 0x0 row expansion is 1, so qadj of a 1x1 matrix is [[1]].
    """
    n = A.n_rows
    if not A.is_square():
        raise NotSquare(f"qadj needs a square matrix, got {A.shape}")
    if n > MAX_FACTORIAL_DIM:
        raise ComplexityLimit(
            f"n = {n} exceeds the factorial-sum cap n <= {MAX_FACTORIAL_DIM}")
    if n == 1:
        return QMatrix([[Quaternion(1.0)]])
    out = []
    for p in range(1, n + 1):
        row = []
        for q in range(1, n + 1):
            val = row_expansion(natural_submatrix(A, q, p))
            row.append(val if p == q else -val)
        out.append(row)
    return QMatrix(out)


def det_invariance_check(H: HermitianQMatrix, k: int, j: int, lam) -> float:
    """|det(P* H P) - det(H)| for P = E + lam * (column j into column k)."""
    n = H.n
    if not (1 <= k <= n and 1 <= j <= n):
        raise IndexOutOfRange(f"indices ({k},{j}) outside 1..{n}")
    if j == k:
        raise IndexOutOfRange("column shear needs j != k")
    lam = _coerce(lam)
    P = [[Quaternion(1.0 if p == q else 0.0) for q in range(n)] for p in range(n)]
    P[j - 1][k - 1] = lam
    P = QMatrix(P)
    sheared = qmatrix.matmul(qmatrix.conj_transpose(P), qmatrix.matmul(H.inner, P))
    return (det(sheared) - det(H.inner)).modulus()
