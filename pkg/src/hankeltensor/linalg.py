"""Dense kernels behind the decompositions.

The Takagi factorization of a real PSD Hankel matrix coincides with its
eigendecomposition, so :func:`takagi_psd` is a cyclic-Jacobi eigensolver
plus rank truncation and a definiteness check. Indefinite input is rejected
rather than factorized.
"""

from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .core import HankelMatrix
from .errors import ConvergenceError, NotPSDError, StructureError

#: default rank tolerance, relative to the largest |eigenvalue|
RANK_TOL = 1e-13
#: Jacobi stops when every off-diagonal entry is below this times ||H||_F
JACOBI_TOL = 1e-14
MAX_SWEEPS = 60


@dataclass(frozen=True, eq=False)
class TakagiFactorization:
    U: np.ndarray
    d: np.ndarray
    tol: float

    @property
    def rank(self):
        return self.d.size

    def reconstruct(self):
        return (self.U * self.d) @ self.U.T


@dataclass(frozen=True, eq=False)
class RootSet:
    roots: np.ndarray
    residual_bound: float
    iterations: int = 0


def _dense(H):
    if isinstance(H, HankelMatrix):
        return H.to_array()
    A = np.asarray(H, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise StructureError(f"expected a square matrix, got shape {A.shape}")
    return A


def _fix_signs(V):
    # first component above noise level is made positive
    V = V.copy()
    for j in range(V.shape[1]):
        col = V[:, j]
        big = np.abs(col) > 1e-8 * np.abs(col).max()
        if big.any() and col[np.argmax(big)] < 0:
            V[:, j] = -col
    return V


def sym_eig(H):
    """Eigen-decomposition of a symmetric matrix by cyclic Jacobi.

    Returns eigenvalues in descending order and the matching orthonormal
    eigenvectors as columns, each with its first significant entry positive.
    """
    A = _dense(H)
    fro = np.linalg.norm(A)
    if np.linalg.norm(A - A.T) > 1e-12 * fro:
        raise StructureError("matrix is not symmetric")
    A = 0.5 * (A + A.T)
    if A.shape[0] == 0:
        return np.zeros(0), np.zeros((0, 0))
    w, V, sweeps = kernels.jacobi_eigh(np.ascontiguousarray(A), MAX_SWEEPS)
    if sweeps >= MAX_SWEEPS:
        off = np.abs(V.T @ A @ V - np.diag(w)).max()
        if off > JACOBI_TOL * fro:
            raise ConvergenceError(
                f"Jacobi did not converge in {MAX_SWEEPS} sweeps", residual=off)
    order = np.argsort(-w, kind="stable")
    return w[order], _fix_signs(V[:, order])


def takagi_psd(H, tol=RANK_TOL):
    """Factor a PSD Hankel matrix as ``U diag(d) U^T`` with ``d > tol*||H||``.

    Raises :class:`NotPSDError` when an eigenvalue falls below ``-tol*||H||``.
    """
    w, V = sym_eig(H)
    scale = np.abs(w).max() if w.size else 0.0
    if w.size and w[-1] < -tol * scale:
        raise NotPSDError(
            f"matrix is not positive semidefinite: eigenvalue {w[-1]:.6g}",
            eigenvalue=float(w[-1]))
    keep = w > tol * scale
    return TakagiFactorization(V[:, keep], w[keep], tol)


def companion(a):
    """Companion matrix of ``x^r - a[r-1] x^(r-1) - ... - a[0]``."""
    a = np.asarray(a, dtype=float)
    r = a.size
    C = np.zeros((r, r))
    C[np.arange(r - 1), np.arange(1, r)] = 1.0
    C[-1, :] = a
    return C


def poly_roots(a, max_iter=500):
    """All roots of the monic ``p(x) = x^r - a[r-1] x^(r-1) - ... - a[0]``.

    Aberth–Ehrlich iteration, started on a circle around the root centroid
    whose radius comes from the Gershgorin discs of the companion matrix.
    """
    a = np.asarray(a, dtype=float)
    r = a.size
    if r < 1:
        raise ValueError("need at least one coefficient")
    coeffs = np.concatenate([[1.0], -a[::-1]])
    center = a[-1] / r
    C = companion(a)
    # every root lies in some disc |z - C_ii| <= sum_j!=i |C_ij|
    radii = np.abs(C).sum(axis=1) - np.abs(np.diag(C))
    reach = np.max(np.abs(np.diag(C) - center) + radii)
    radius = max(reach, 1e-3)
    angles = 2 * np.pi * np.arange(r) / r + 0.4
    z0 = center + radius * np.exp(1j * angles)
    scale = max(1.0, np.abs(a).max())
    roots, its = kernels.aberth(coeffs, z0, max_iter, 4 * np.finfo(float).eps * scale)
    bound = 1e-8 * scale
    resid = np.abs(np.polyval(coeffs, roots))
    if not np.all(np.isfinite(roots)) or resid.max() > bound:
        raise ConvergenceError(
            f"Aberth iteration left residual {resid.max():.3g} > {bound:.3g} "
            f"after {its} iterations", residual=resid)
    return RootSet(roots, bound, its)


def vandermonde_solve(nodes, b):
    """Solve ``sum_k alpha_k nodes_k**j = b_j`` for ``j < r`` (Björck–Pereyra)."""
    x = np.ascontiguousarray(nodes, dtype=float)
    b = np.asarray(b, dtype=float)
    if x.ndim != 1 or b.shape != x.shape:
        raise StructureError("nodes and right-hand side must be vectors of equal length")
    if x.size > 1:
        gaps = np.abs(x[:, None] - x[None, :])[np.triu_indices(x.size, 1)]
        spread = gaps.max()
        if spread == 0 or gaps.min() <= 1e-12 * spread:
            raise StructureError("Vandermonde nodes are not pairwise distinct")
    return kernels.bjorck_pereyra(x, b)
