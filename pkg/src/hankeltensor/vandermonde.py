"""Augmented Vandermonde decomposition of strong Hankel tensors.

Every strong Hankel tensor splits as

    T = sum_k alpha_k v_k^{om} + alpha_inf e_n^{om},   alpha_k > 0,

with Vandermonde vectors ``v_k = [1, xi_k, ..., xi_k^(n-1)]``. The tensor
and its associated Hankel matrix share the generator, so the poles and
coefficients come from the matrix: factor it, peel the ``e_n`` corner term
when ``e_n`` lies in its range, then recover the remaining poles from a
Yule–Walker recurrence and a Vandermonde solve.
"""

from dataclasses import dataclass, field

import numpy as np

from .core import HankelMatrix, HankelTensor, associated_matrix
from .errors import NotPSDError, NotStrongError, NumericalError, StructureError
from .linalg import RANK_TOL, poly_roots, takagi_psd, vandermonde_solve

#: tolerance for deciding e_n in Ran(U): ||e_n - U U^T e_n|| <= CORNER_TOL
CORNER_TOL = 1e-8
#: roots with |Im| above this times max(1, |root|) are an error
IMAG_TOL = 1e-6


@dataclass(frozen=True, eq=False)
class VandermondeDecomposition:
    poles: np.ndarray
    alphas: np.ndarray
    alpha_inf: float
    order: int
    dim: int
    gamma: float | None = None
    yw_cond: float | None = field(default=None, compare=False)

    @property
    def rank(self):
        return self.poles.size + (self.alpha_inf > 0)

    def generator(self):
        L = self.order * (self.dim - 1) + 1
        g = (self.alphas[None, :] * self.poles[None, :] ** np.arange(L)[:, None]).sum(axis=1)
        g[-1] += self.alpha_inf
        return g

    def to_json(self):
        return {
            "poles": self.poles.tolist(),
            "alphas": self.alphas.tolist(),
            "alpha_inf": float(self.alpha_inf),
            "order": self.order,
            "dim": self.dim,
        }


def peel_corner(F):
    """Coefficient of the unique ``e_n e_n^T`` whose removal drops the rank.

    ``F`` factors the PSD matrix; ``e_n`` must lie in the range of ``F.U``.
    """
    U, d = F.U, F.d
    if F.rank == 0:
        raise StructureError("e_n is not in the range of a zero matrix")
    e = np.zeros(U.shape[0])
    e[-1] = 1.0
    gap = np.linalg.norm(e - U @ (U.T @ e))
    if gap > CORNER_TOL:
        raise StructureError(f"e_n is not in the range of U (distance {gap:.3g})")
    return float(1.0 / np.sum(U[-1] ** 2 / d))


def _default_gamma(g, r):
    # min-norm fit of the r-1 available recurrence rows, extrapolated one step
    A = np.array([g[k - r:k] for k in range(r, 2 * r - 1)]).reshape(r - 1, r)
    a = np.linalg.lstsq(A, g[r:2 * r - 1], rcond=None)[0] if r > 1 else np.zeros(1)
    return float(a @ g[r - 1:2 * r - 1])


def _finite_poles(g, s, r, gamma):
    """Poles and weights for a corner-free rank-r PSD Hankel generator."""
    H = HankelMatrix(s, g).to_array()
    lead = H[:r, :r]
    if r == s:
        if gamma is None:
            gamma = _default_gamma(g, r)
        rhs = np.concatenate([g[r:2 * r - 1], [gamma]])
    else:
        rhs = g[r:2 * r]
    cond = float(np.linalg.cond(lead))
    a = np.linalg.solve(lead, rhs)
    roots = poly_roots(a).roots
    bad = np.abs(roots.imag) > IMAG_TOL * np.maximum(1.0, np.abs(roots))
    if bad.any():
        raise NumericalError(
            f"recurrence polynomial has complex roots {roots[bad]}; "
            f"rank tolerance likely too loose", residual=np.abs(roots.imag).max())
    xi = np.sort(roots.real)[::-1]
    alpha = vandermonde_solve(xi, g[:r])
    if np.any(alpha <= 0):
        raise NumericalError(f"nonpositive Vandermonde coefficient {alpha.min():.3g}",
                             residual=alpha.min())
    return xi, alpha, gamma if r == s else None, cond


def matrix_avd(H, tol=RANK_TOL, gamma=None):
    """Augmented Vandermonde decomposition of a PSD Hankel matrix."""
    s = H.size
    g = np.array(H.generator, copy=True)
    try:
        F = takagi_psd(H, tol)
    except NotPSDError as exc:
        raise NotStrongError(exc.eigenvalue) from exc
    alpha_inf = 0.0
    r = F.rank
    if 0 < r < s:
        e = np.zeros(s)
        e[-1] = 1.0
        if np.linalg.norm(e - F.U @ (F.U.T @ e)) <= CORNER_TOL:
            alpha_inf = peel_corner(F)
            g[-1] -= alpha_inf
            F2 = takagi_psd(HankelMatrix(s, g), tol)
            if F2.rank != r - 1:
                raise NumericalError(
                    f"corner peel left rank {F2.rank}, expected {r - 1}")
            r = F2.rank
            # a second peel is impossible: the rank argument excludes e_n now
            assert np.linalg.norm(e - F2.U @ (F2.U.T @ e)) > CORNER_TOL or r == 0
    if r == 0:
        return VandermondeDecomposition(np.zeros(0), np.zeros(0), alpha_inf, 2, s)
    xi, alpha, used_gamma, cond = _finite_poles(g, s, r, gamma)
    return VandermondeDecomposition(xi, alpha, alpha_inf, 2, s, used_gamma, cond)


def avd_decompose(T, tol=RANK_TOL, gamma=None):
    """Augmented Vandermonde decomposition of a strong Hankel tensor."""
    dec = matrix_avd(associated_matrix(T), tol, gamma)
    return VandermondeDecomposition(dec.poles, dec.alphas, dec.alpha_inf,
                                    T.order, T.dim, dec.gamma, dec.yw_cond)


def reconstruct(dec):
    return HankelTensor(dec.order, dec.dim, dec.generator())
