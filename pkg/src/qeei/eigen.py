"""Right eigenvalues and eigenvectors of quaternion Hermitian matrices.

The spectrum comes from the 4n x 4n real lift, whose eigenvalues are the
right eigenvalues each repeated four times.  Eigenvector component moduli
come from the eigenvector-eigenvalue identity (ratio of products of
spectral gaps against minor spectra); full eigenvectors come from one
column of the quaternion adjugate of lambda*E - A, which is a rank-one
outer product c * v v*.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import qdet, qmatrix
from .quat import Quaternion
from .errors import (DegenerateEigenvalue, GroupingFailure, IdentityViolation,
                     IndexOutOfRange, NoConvergence, NotSymmetric, PivotFailure)
from .qmatrix import HermitianQMatrix, QMatrix

JACOBI_MAX_SWEEPS = 100
JACOBI_OFF_TOL = 1e-12


@dataclass(frozen=True)
class Spectrum:
    """Ascending real right eigenvalues, one per lift quadruple."""

    values: tuple
    grouping_tol: float
    source_dim: int

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def spectral_range(self):
        return self.values[-1] - self.values[0]

    def gap(self, i):
        """Distance from values[i-1] (1-based) to the rest of the spectrum."""
        lam = self.values[i - 1]
        others = [v for k, v in enumerate(self.values) if k != i - 1]
        return min((abs(lam - v) for v in others), default=math.inf)


@dataclass(frozen=True)
class EigenPair:
    lam: float
    vector: QMatrix          # n x 1, unit, pivot component real >= 0
    pivot_index: int         # 1-based
    residual: float          # ||A v - v lam||_2
    norm_dev: float          # | ||v||_2 - 1 |


@dataclass(frozen=True)
class EEIReport:
    i: int
    j: int
    lhs: float
    rhs: float

    @property
    def residual(self):
        return abs(self.lhs - self.rhs)


def symmetric_eig(S):
    """Cyclic Jacobi diagonalization of a real symmetric matrix.

    Returns (values ascending, V) with S V ~= V diag(values) and V
    orthogonal (columns are eigenvectors).
    """
    S = np.asarray(S, dtype=float)
    if S.ndim != 2 or S.shape[0] != S.shape[1]:
        raise NotSymmetric(f"expected a square matrix, got shape {S.shape}")
    n = S.shape[0]
    scale = 1.0 + np.max(np.abs(S)) if S.size else 1.0
    if np.max(np.abs(S - S.T)) > 1e-10 * scale:
        raise NotSymmetric("matrix is not symmetric within tolerance")

    A = 0.5 * (S + S.T)
    V = np.eye(n)
    fnorm = np.linalg.norm(A)
    if fnorm == 0.0 or n == 1:
        return np.diag(A).copy(), V

    for _ in range(JACOBI_MAX_SWEEPS):
        # measure off-diagonal mass entrywise; the ||A||_F^2 - sum(diag^2)
        # shortcut cancels catastrophically near convergence
        off_entries = A - np.diag(np.diag(A))
        off = np.linalg.norm(off_entries)
        if off <= JACOBI_OFF_TOL * fnorm:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(1.0, theta))
                c = 1.0 / math.hypot(1.0, t)
                s = t * c
                _rotate(A, V, p, q, c, s)
    else:
        raise NoConvergence(
            f"Jacobi did not converge in {JACOBI_MAX_SWEEPS} sweeps")

    values = np.diag(A).copy()
    order = np.argsort(values, kind="stable")
    return values[order], V[:, order]


def _rotate(A, V, p, q, c, s):
    rp, rq = A[p, :].copy(), A[q, :].copy()
    A[p, :] = c * rp - s * rq
    A[q, :] = s * rp + c * rq
    cp, cq = A[:, p].copy(), A[:, q].copy()
    A[:, p] = c * cp - s * cq
    A[:, q] = s * cp + c * cq
    A[p, q] = A[q, p] = 0.0
    vp, vq = V[:, p].copy(), V[:, q].copy()
    V[:, p] = c * vp - s * vq
    V[:, q] = s * vp + c * vq


def default_grouping_tol(lift):
    return 1e-7 * (1.0 + np.max(np.abs(lift)))


def right_eigenvalues(A: HermitianQMatrix, grouping_tol=None) -> Spectrum:
    """Ascending right eigenvalues via the real lift's eigenvalue quadruples."""
    n = A.n
    lift = qmatrix.real_lift(A.inner)
    if grouping_tol is None:
        grouping_tol = default_grouping_tol(lift)
    values, _ = symmetric_eig(lift)
    grouped = []
    for t in range(n):
        quad = values[4 * t:4 * t + 4]
        spread = quad[-1] - quad[0]
        if spread >= grouping_tol:
            raise GroupingFailure(
                f"lift eigenvalues around index {4 * t} spread {spread:.3e} "
                f">= grouping tol {grouping_tol:.3e}")
        grouped.append(float(np.mean(quad)))
    return Spectrum(tuple(grouped), grouping_tol, n)


def default_simple_tol(spectrum: Spectrum) -> float:
    return 1e-6 * (1.0 + spectrum.spectral_range())


def _require_simple(spectrum: Spectrum, i: int, simple_tol=None) -> float:
    n = len(spectrum)
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"eigenvalue index {i} outside 1..{n}")
    if simple_tol is None:
        simple_tol = default_simple_tol(spectrum)
    gap = spectrum.gap(i)
    if gap <= simple_tol:
        raise DegenerateEigenvalue(
            f"eigenvalue {i} has gap {gap:.3e} <= simple tol {simple_tol:.3e}")
    return simple_tol


def _gap_product(spectrum: Spectrum, i: int) -> float:
    lam = spectrum[i - 1]
    prod = 1.0
    for k, mu in enumerate(spectrum.values):
        if k != i - 1:
            prod *= lam - mu
    return prod


def eei_modulus(A: HermitianQMatrix, i: int, j: int, simple_tol=None,
                clamp_tol=1e-9) -> float:
    """|v_ij|^2 from eigenvalues of A and of the minor M_j alone."""
    n = A.n
    if not 1 <= j <= n:
        raise IndexOutOfRange(f"component index {j} outside 1..{n}")
    spectrum = right_eigenvalues(A)
    _require_simple(spectrum, i, simple_tol)
    if n == 1:
        return 1.0
    lam = spectrum[i - 1]
    minor_spec = right_eigenvalues(qmatrix.minor(A, j))
    num = 1.0
    for mu in minor_spec.values:
        num *= lam - mu
    ratio = num / _gap_product(spectrum, i)
    return _clamp_modulus(ratio, clamp_tol, i, j)


def _clamp_modulus(ratio, clamp_tol, i, j):
    if ratio < -clamp_tol or ratio > 1.0 + clamp_tol:
        raise IdentityViolation(
            f"|v_{i}{j}|^2 = {ratio:.3e} outside [0, 1] beyond rounding slack")
    return min(max(ratio, 0.0), 1.0)


def eigenvector_from_qadj(A: HermitianQMatrix, i: int, simple_tol=None) -> EigenPair:
    """Unit eigenvector for the i-th (ascending, simple) eigenvalue.

    qadj(lam*E - A) equals c * v v* with c the product of spectral gaps,
    so one column recovers v once the pivot component is made real.
    """
    n = A.n
    spectrum = right_eigenvalues(A)
    _require_simple(spectrum, i, simple_tol)
    lam = spectrum[i - 1]
    c = _gap_product(spectrum, i)
    shifted = _lambda_shift(A.inner, lam)
    Q = qdet.qadj(shifted)

    # diagonal of Q is c * |v_m|^2; pick the dominant component
    weights = [Q[m, m].w / c for m in range(n)]
    m = max(range(n), key=lambda t: weights[t])
    if weights[m] < 1e-12:
        raise PivotFailure(
            "no usable diagonal pivot in qadj (rank-one structure lost)")
    vm = math.sqrt(weights[m])
    comps = []
    for p in range(n):
        if p == m:
            comps.append([Quaternion(vm)])
        else:
            comps.append([Q[p, m] * (1.0 / (vm * c))])
    v = QMatrix(comps)

    res = _residual(A.inner, v, lam)
    norm = math.sqrt(sum(a.norm_sq() for row in v.rows for a in row))
    return EigenPair(lam, v, m + 1, res, abs(norm - 1.0))


def _lambda_shift(A: QMatrix, lam: float) -> QMatrix:
    """lam * E - A."""
    n = A.n_rows
    return QMatrix([[Quaternion(lam) - A[p, q] if p == q else -A[p, q]
                     for q in range(n)] for p in range(n)])


def _residual(A: QMatrix, v: QMatrix, lam: float) -> float:
    r = qmatrix.matmul(A, v) - qmatrix.scale_right(v, lam)
    return math.sqrt(sum(a.norm_sq() for row in r.rows for a in row))


def eei_report(A: HermitianQMatrix, simple_tol=None) -> list:
    """Both sides of the identity for every (i, j), via the adjugate route."""
    n = A.n
    if n == 1:
        return [EEIReport(1, 1, 1.0, 1.0)]
    spectrum = right_eigenvalues(A)
    for i in range(1, n + 1):
        _require_simple(spectrum, i, simple_tol)
    minor_specs = [right_eigenvalues(qmatrix.minor(A, j))
                   for j in range(1, n + 1)]
    reports = []
    for i in range(1, n + 1):
        lam = spectrum[i - 1]
        c = _gap_product(spectrum, i)
        pair = eigenvector_from_qadj(A, i, simple_tol)
        for j in range(1, n + 1):
            lhs = pair.vector[j - 1, 0].norm_sq() * c
            rhs = 1.0
            for mu in minor_specs[j - 1].values:
                rhs *= lam - mu
            reports.append(EEIReport(i, j, lhs, rhs))
    return reports


def verify_outer_product(A: HermitianQMatrix, i: int, simple_tol=None) -> float:
    """Max deviation of qadj(lam*E - A) from c * v v*."""
    spectrum = right_eigenvalues(A)
    _require_simple(spectrum, i, simple_tol)
    lam = spectrum[i - 1]
    c = _gap_product(spectrum, i)
    pair = eigenvector_from_qadj(A, i, simple_tol)
    Q = qdet.qadj(_lambda_shift(A.inner, lam))
    outer = qmatrix.matmul(pair.vector, qmatrix.conj_transpose(pair.vector))
    scaled = QMatrix([[a * c for a in row] for row in outer.rows])
    return (Q - scaled).norm_inf()
