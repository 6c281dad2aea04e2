"""Test-tensor constructions: Hilbert, planted Vandermonde, random strong."""

import numpy as np

from .core import HankelTensor, hilbert_tensor

__all__ = ["hilbert_tensor", "planted_generator", "planted_tensor",
           "random_strong", "example3_tensor"]


def planted_generator(length, poles, alphas, alpha_inf=0.0):
    """``g_j = sum_k alpha_k poles_k^j`` plus ``alpha_inf`` on the last entry."""
    poles = np.asarray(poles, dtype=float)
    alphas = np.asarray(alphas, dtype=float)
    if poles.shape != alphas.shape:
        raise ValueError("poles and alphas must have equal length")
    j = np.arange(length)
    # 0**0 = 1 keeps a pole at zero contributing to g_0 only
    g = (alphas[None, :] * poles[None, :] ** j[:, None]).sum(axis=1) if poles.size else np.zeros(length)
    g[-1] += alpha_inf
    return g


def planted_tensor(m, n, poles, alphas=None, alpha_inf=0.0):
    poles = np.asarray(poles, dtype=float)
    if alphas is None:
        alphas = np.ones_like(poles)
    return HankelTensor(m, n, planted_generator(m * (n - 1) + 1, poles, alphas, alpha_inf))


def random_strong(m, n, rank, rng, corner=False, pole_range=1.0):
    """Strong Hankel tensor with ``rank`` random real poles in
    ``[-pole_range, pole_range]`` and weights in ``[0.5, 1.5]``.

    Returns ``(T, poles, alphas, alpha_inf)``.
    """
    poles = np.sort(rng.uniform(-pole_range, pole_range, rank))[::-1]
    alphas = rng.uniform(0.5, 1.5, rank)
    alpha_inf = float(rng.uniform(0.5, 1.5)) if corner else 0.0
    return planted_tensor(m, n, poles, alphas, alpha_inf), poles, alphas, alpha_inf


def example3_tensor(rng, n=10, m=4):
    """Order-4 tensor with poles ``{0, xi1, xi2}``, unit weights and a unit
    corner term; ``xi1, xi2`` are uniform on (0, 1)."""
    xi = rng.uniform(0.0, 1.0, 2)
    T = planted_tensor(m, n, np.concatenate([[0.0], xi]), np.ones(3), 1.0)
    return T, xi
