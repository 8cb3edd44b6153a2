"""Brute-force cross-checks, independent of the adjugate machinery.

Row reduction works over the quaternions with row operations applied by
left multiplication only, so the right null space {v : M v = 0} is
preserved and right eigenvectors keep their scalar on the right.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import eigen, qdet, qmatrix
from .errors import DegenerateEigenvalue, DimensionMismatch, NoZeroEigenvalue
from .quat import Quaternion
from .qmatrix import HermitianQMatrix, QMatrix


@dataclass(frozen=True)
class NullSpaceResult:
    basis: tuple          # unit n x 1 QMatrix columns
    rank: int
    pivot_tol: float

    @property
    def dim(self):
        return len(self.basis)


def default_pivot_tol(M: QMatrix) -> float:
    return 1e-10 * (1.0 + M.norm_inf())


def null_space(M: QMatrix, pivot_tol=None) -> NullSpaceResult:
    """Basis of the right null space via Gaussian elimination."""
    if not M.is_square():
        raise DimensionMismatch("null_space expects a square matrix")
    if pivot_tol is None:
        pivot_tol = default_pivot_tol(M)
    n = M.n_rows
    R = [list(row) for row in M.rows]

    pivot_cols = []
    row = 0
    for col in range(n):
        p_best, best = None, pivot_tol
        for r in range(row, n):
            mod = R[r][col].modulus()
            if mod > best:
                p_best, best = r, mod
        if p_best is None:
            continue
        R[row], R[p_best] = R[p_best], R[row]
        inv = R[row][col].inverse()
        R[row] = [inv * a for a in R[row]]
        for r in range(n):
            if r != row:
                factor = R[r][col]
                if factor.norm_sq():
                    R[r] = [a - factor * b for a, b in zip(R[r], R[row])]
        pivot_cols.append(col)
        row += 1
        if row == n:
            break

    free_cols = [c for c in range(n) if c not in pivot_cols]
    basis = []
    for f in free_cols:
        comps = [Quaternion()] * n
        comps[f] = Quaternion(1.0)
        for r, p in enumerate(pivot_cols):
            comps[p] = -R[r][f]
        v = QMatrix([[a] for a in comps])
        basis.append(_unit(v))
    return NullSpaceResult(tuple(basis), len(pivot_cols), pivot_tol)


def _unit(v: QMatrix) -> QMatrix:
    norm = math.sqrt(sum(a.norm_sq() for row in v.rows for a in row))
    return QMatrix([[a * (1.0 / norm)] for (a,) in v.rows])


def _phase_normalize(v: QMatrix) -> tuple:
    """Right-multiply by a unit quaternion so the largest component is
    real and non-negative; returns (vector, pivot index 1-based)."""
    mods = [a.modulus() for (a,) in v.rows]
    m = max(range(len(mods)), key=lambda t: mods[t])
    q = v[m, 0].conj() * (1.0 / mods[m])
    return qmatrix.scale_right(v, q), m + 1


def traditional_eigenpairs(A: HermitianQMatrix, simple_tol=None) -> list:
    """Eigenpairs by solving (A - lam E) v = 0 directly for each lam."""
    spectrum = eigen.right_eigenvalues(A)
    n = A.n
    pairs = []
    for i in range(1, n + 1):
        eigen._require_simple(spectrum, i, simple_tol)
        lam = spectrum[i - 1]
        ns = null_space(eigen._lambda_shift(A.inner, lam))
        if ns.dim != 1:
            raise DegenerateEigenvalue(
                f"null space of A - {lam:g} E has dimension {ns.dim}, expected 1")
        v, m = _phase_normalize(ns.basis[0])
        res = eigen._residual(A.inner, v, lam)
        norm = math.sqrt(sum(a.norm_sq() for row in v.rows for a in row))
        pairs.append(eigen.EigenPair(lam, v, m, res, abs(norm - 1.0)))
    return pairs


def cauchy_binet_residual(A: HermitianQMatrix, B: QMatrix,
                          zero_tol=1e-8) -> float:
    """Residual of the quaternionic Cauchy-Binet identity.

    A must carry a right eigenvalue at zero (shift by an eigenvalue
    first); B is n x (n-1).  Checks
    prod(nonzero eigenvalues) * det((B v)*(B v)) = det(B* A B).
    """
    n = A.n
    if B.n_rows != n or B.n_cols != n - 1:
        raise DimensionMismatch(
            f"B must be {n} x {n - 1}, got {B.shape}")
    spectrum = eigen.right_eigenvalues(A)
    z = min(range(n), key=lambda t: abs(spectrum[t]))
    if abs(spectrum[z]) > zero_tol:
        raise NoZeroEigenvalue(
            f"smallest |eigenvalue| is {abs(spectrum[z]):.3e} > {zero_tol:.1e}")
    ns = null_space(eigen._lambda_shift(A.inner, spectrum[z]))
    if ns.dim < 1:
        raise NoZeroEigenvalue("no null vector found at the zero eigenvalue")
    v = ns.basis[0]

    prod = 1.0
    for k in range(n):
        if k != z:
            prod *= spectrum[k]
    aug = QMatrix([list(B.rows[p]) + [v[p, 0]] for p in range(n)])
    gram = qmatrix.matmul(qmatrix.conj_transpose(aug), aug)
    lhs = qdet.det(gram) * prod
    rhs = qdet.det(qmatrix.matmul(qmatrix.conj_transpose(B),
                                  qmatrix.matmul(A.inner, B)))
    return (lhs - rhs).modulus()
