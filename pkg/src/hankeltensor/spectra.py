"""H-eigenvalues of Hankel tensors and checks of the inheritance bounds.

A real ``lam`` is an H-eigenvalue of ``T`` when ``T x^{m-1} = lam x^{[m-1]}``
for some nonzero real ``x`` (``x^{[m-1]}`` is the entrywise power). Three
solvers are provided:

* :func:`heig_power` -- shifted power iteration plus Newton polish, batched
  over many starts by :func:`heig_multistart`;
* :func:`heig_all_small` -- every real eigenpair for ``n <= 3`` from a dense
  angular scan (exact bracketing for ``n = 2``);
* ``sym_eig`` for the matrix case ``m = 2``.
"""

from dataclasses import dataclass, field, asdict
from functools import lru_cache

import numpy as np
from scipy.optimize import brentq, minimize, minimize_scalar
from scipy.spatial import cKDTree

from .core import (HankelTensor, associated_matrix, as_tensor, conv_power,
                   conv_power_rows, contraction_matrix, grad_eval, grad_rows,
                   higher_order_associate, poly_eval)
from .errors import ConvergenceError, DimensionError, NumericalError, StructureError
from .linalg import sym_eig

#: an eigenpair is accepted when ||T x^{m-1} - lam x^{[m-1]}|| is below this
RESIDUAL_TOL = 1e-8
#: slack in all bound checks
BOUND_SLACK = 1e-8
DEFAULT_STARTS = 500
LIFT_STARTS = 200


@dataclass(frozen=True, eq=False)
class HEigenPair:
    value: float
    vector: np.ndarray
    residual: float

    def to_json(self):
        return {"value": float(self.value), "vector": self.vector.tolist(),
                "residual": float(self.residual)}


def _canonical(x):
    x = x / np.linalg.norm(x)
    big = np.abs(x) > 1e-8
    if big.any() and x[np.argmax(big)] < 0:
        x = -x
    return x


def h_residual(T, x, lam):
    x = np.asarray(x, dtype=float)
    return float(np.linalg.norm(grad_eval(T, x) - lam * x ** (T.order - 1)))


def _make_pair(T, x, lam):
    # x -> -x keeps lam for every order, so the sign can be normalized
    x = _canonical(np.asarray(x, dtype=float))
    return HEigenPair(float(lam), x, h_residual(T, x, lam))


def _lsq_value(g, d):
    dd = d @ d
    return float(g @ d / dd) if dd > 0 else 0.0


def contraction_rows(T, X):
    """Batched ``T x^{m-2}`` as an array of shape (S, n, n)."""
    n = T.dim
    W = conv_power_rows(X, T.order - 2)
    idx = np.arange(2 * n - 1)[:, None] + np.arange(W.shape[1])[None, :]
    g = W @ T.generator[idx].T
    i = np.arange(n)
    return g[:, i[:, None] + i[None, :]]


def _newton_F(T, X, lam):
    G = grad_rows(T, X)
    return np.column_stack([G - lam[:, None] * X ** (T.order - 1),
                            0.5 * (np.einsum("ij,ij->i", X, X) - 1.0)])


def newton_rows(T, X, lam=None, max_iter=40):
    """Newton's method on ``[T x^{m-1} - lam x^{[m-1]}; (|x|^2 - 1)/2] = 0``
    for every row of ``X`` at once.

    Steps use the pseudo-inverse of the Jacobian, so singular Jacobians
    (multiple eigenvalues) do not abort the iteration; each row backtracks
    on its own residual. Returns ``(X, lam, residual)``.
    """
    m, n = T.order, T.dim
    X = np.array(np.atleast_2d(X), dtype=float)
    X /= np.linalg.norm(X, axis=1, keepdims=True)
    if lam is None:
        G = grad_rows(T, X)
        D = X ** (m - 1)
        lam = np.einsum("ij,ij->i", G, D) / np.einsum("ij,ij->i", D, D)
    lam = np.array(lam, dtype=float)
    F = _newton_F(T, X, lam)
    fn = np.linalg.norm(F, axis=1)
    floor = 1e-14 * (1 + np.abs(T.generator).max() * n ** (m - 1))
    live = np.isfinite(fn) & (fn > floor)
    for _ in range(max_iter):
        if not live.any():
            break
        rows = np.flatnonzero(live)
        x, l = X[rows], lam[rows]
        J = np.zeros((rows.size, n + 1, n + 1))
        J[:, :n, :n] = contraction_rows(T, x)
        J[:, np.arange(n), np.arange(n)] -= l[:, None] * x ** (m - 2)
        J[:, :n, :n] *= m - 1
        J[:, :n, n] = -x ** (m - 1)
        J[:, n, :n] = x
        step = -np.einsum("sij,sj->si", np.linalg.pinv(J), F[rows])
        t = np.ones(rows.size)
        todo = np.ones(rows.size, dtype=bool)
        for _ in range(14):
            k = np.flatnonzero(todo)
            if not k.size:
                break
            xn = x[k] + t[k, None] * step[k, :n]
            ln = l[k] + t[k] * step[k, n]
            Fn = _newton_F(T, xn, ln)
            ok = np.linalg.norm(Fn, axis=1) < fn[rows[k]]
            r = rows[k[ok]]
            X[r], lam[r], F[r] = xn[ok], ln[ok], Fn[ok]
            fn[r] = np.linalg.norm(Fn[ok], axis=1)
            todo[k[ok]] = False
            t[k[~ok]] *= 0.5
        # rows that cannot decrease the residual any further are done
        live[rows[todo]] = False
        live &= fn > floor
    X /= np.linalg.norm(X, axis=1, keepdims=True)
    G = grad_rows(T, X)
    res = np.linalg.norm(G - lam[:, None] * X ** (m - 1), axis=1)
    return X, lam, res


def newton_polish(T, x, lam=None, max_iter=40):
    """Single-vector form of :func:`newton_rows`; returns ``(x, lam, residual)``."""
    X, L, R = newton_rows(T, np.asarray(x, dtype=float)[None, :],
                          None if lam is None else [lam], max_iter)
    return X[0], float(L[0]), float(R[0])


# -- power iteration ---------------------------------------------------------

def gershgorin_shift(T):
    """Bound on |lam| for every H-eigenvalue: the largest absolute row sum
    ``max_i sum |T_{i,i2..im}|``."""
    absT = HankelTensor(T.order, T.dim, np.abs(T.generator))
    return float(grad_eval(absT, np.ones(T.dim)).max())


def shift_cap(T):
    return T.order * float(np.abs(T.generator).sum()) * T.dim ** (T.order - 1)


def _power_batch(T, X, sign, shift, cap, tol=1e-10):
    """Shifted power iteration on ``sign*T`` for every row of ``X``.

    Even order: ``x <- (sign*T x^{m-1} + a x^{[m-1]})^{[1/(m-1)]}``, a signed
    root, which increases ``sign * T x^m / ||x||_m^m``; when a step fails to
    increase it the row's shift is doubled (up to :func:`shift_cap`) and the
    step retried. Odd order keeps each entry's sign and takes the root of the
    positive part. With ``shift`` given, it is used fixed.
    """
    m = T.order
    S = X.shape[0]
    X = X / np.linalg.norm(X, axis=1, keepdims=True)
    adaptive = shift is None
    alpha = np.full(S, gershgorin_shift(T) if adaptive else float(shift))
    cap_alpha = shift_cap(T)
    even = m % 2 == 0
    prev_X = X.copy()
    prev_rho = np.full(S, -np.inf)
    active = np.ones(S, dtype=bool)
    resid = np.full(S, np.inf)
    for _ in range(cap):
        G = grad_rows(T, X)
        D = X ** (m - 1)
        dd = np.einsum("ij,ij->i", D, D)
        lam = np.einsum("ij,ij->i", G, D) / np.where(dd > 0, dd, 1.0)
        resid = np.linalg.norm(G - lam[:, None] * D, axis=1)
        active &= resid > tol
        if not active.any():
            break
        if even and adaptive:
            rho = sign * np.einsum("ij,ij->i", G, X) / np.sum(X ** m, axis=1)
            worse = active & (rho < prev_rho - 1e-13 * np.abs(prev_rho))
            if worse.any():
                X[worse] = prev_X[worse]
                alpha[worse] = np.minimum(2 * alpha[worse], cap_alpha)
                G[worse] = grad_rows(T, X[worse])
                D[worse] = X[worse] ** (m - 1)
                rho[worse] = prev_rho[worse]
            prev_X = X.copy()
            prev_rho = rho
        W = sign * G + alpha[:, None] * D
        if even:
            Y = np.sign(W) * np.abs(W) ** (1.0 / (m - 1))
        else:
            Y = np.sign(X) * np.maximum(W, 0.0) ** (1.0 / (m - 1))
        norms = np.linalg.norm(Y, axis=1, keepdims=True)
        ok = (norms[:, 0] > 0) & active
        X[ok] = Y[ok] / norms[ok]
    return X, resid


def heig_power(T, shift=None, x0=None, cap=5000, mode="max", seed=0):
    """One H-eigenpair from a shifted power iteration and Newton polish.

    ``mode="min"`` runs the iteration on ``-T``, steering toward the
    smallest H-eigenvalue for even order. Raises :class:`ConvergenceError`
    carrying the final residual when no eigenpair is reached.
    """
    if T.order < 2:
        raise DimensionError("H-eigenvalues need order >= 2")
    if x0 is None:
        x0 = np.random.default_rng(seed).standard_normal(T.dim)
    sign = 1.0 if mode == "max" else -1.0
    X, _ = _power_batch(T, np.atleast_2d(np.asarray(x0, dtype=float)).copy(),
                        sign, shift, cap)
    x, lam, res = newton_polish(T, X[0])
    if not np.isfinite(res) or res > RESIDUAL_TOL:
        raise ConvergenceError(
            f"power iteration did not reach an H-eigenpair (residual {res:.3g})",
            residual=res)
    return _make_pair(T, x, lam)


def _dedupe(pairs, tol=1e-6):
    out = []
    for p in sorted(pairs, key=lambda p: p.value):
        if not any(abs(p.value - q.value) <= tol * max(1, abs(q.value))
                   and np.linalg.norm(p.vector - q.vector) <= 1e-5 for q in out):
            out.append(p)
    return out


@dataclass(eq=False)
class MultiStartResult:
    pairs: list
    starts: int
    converged: int
    seed: int

    @property
    def values(self):
        return np.array([p.value for p in self.pairs])

    @property
    def min_pair(self):
        return min(self.pairs, key=lambda p: p.value) if self.pairs else None

    @property
    def max_pair(self):
        return max(self.pairs, key=lambda p: p.value) if self.pairs else None

    def to_json(self):
        return {
            "starts": self.starts, "converged": self.converged, "seed": self.seed,
            "min": self.min_pair.to_json() if self.pairs else None,
            "max": self.max_pair.to_json() if self.pairs else None,
            "eigenvalues": sorted({round(float(p.value), 10) for p in self.pairs}),
        }


def heig_multistart(T, starts=DEFAULT_STARTS, seed=0, cap=500, shift=None):
    """Run ``starts`` power iterations toward the minimum and as many toward
    the maximum from Gaussian starts; keep every start that polishes to a
    genuine eigenpair."""
    if T.order < 2:
        raise DimensionError("H-eigenvalues need order >= 2")
    rng = np.random.default_rng(seed)
    pairs = []
    converged = 0
    for sign in (-1.0, 1.0):
        X0 = rng.standard_normal((starts, T.dim))
        X, _ = _power_batch(T, X0, sign, shift, cap)
        X, lam, res = newton_rows(T, X)
        good = np.isfinite(res) & (res <= RESIDUAL_TOL)
        converged += int(good.sum())
        pairs += [_make_pair(T, x, l) for x, l in zip(X[good], lam[good])]
    return MultiStartResult(_dedupe(pairs), 2 * starts, converged, seed)


# -- exhaustive search for n <= 3 ---------------------------------------------

def _residual_rows(T, X):
    G = grad_rows(T, X)
    D = X ** (T.order - 1)
    dd = np.einsum("ij,ij->i", D, D)
    lam = np.einsum("ij,ij->i", G, D) / dd
    return G, D, lam, np.linalg.norm(G - lam[:, None] * D, axis=1)


def _scan_circle(T, npts):
    """Eigen-directions for n = 2 as zeros of
    ``g(t) = (T x^{m-1})_1 x_2^{m-1} - (T x^{m-1})_2 x_1^{m-1}`` on a half circle."""
    m = T.order
    t0 = 0.1234567
    thetas = t0 + np.pi * np.arange(npts + 1) / npts

    def g_of(t):
        t = np.atleast_1d(t)
        X = np.column_stack([np.cos(t), np.sin(t)])
        G = grad_rows(T, X)
        return G[:, 0] * X[:, 1] ** (m - 1) - G[:, 1] * X[:, 0] ** (m - 1)

    g = g_of(thetas)
    scale = np.abs(g).max()
    if scale <= 1e-14 * max(1.0, np.abs(T.generator).max()):
        return None, 0
    roots = []
    changes = 0
    for i in range(npts):
        a, b = g[i], g[i + 1]
        if a == 0:
            roots.append(thetas[i])
        elif a * b < 0:
            changes += 1
            lo, hi = thetas[i], thetas[i + 1]
            fa, fb = g_of(lo)[0], g_of(hi)[0]
            if fa * fb < 0:
                roots.append(brentq(lambda t: g_of(t)[0], lo, hi, xtol=1e-15, maxiter=200))
            else:
                # the sign change is rounding noise around a zero at an endpoint
                roots.append(lo if abs(fa) <= abs(fb) else hi)
    # tangential zeros: local minima of |g| that nearly vanish
    ag = np.abs(g)
    for i in range(1, npts):
        if ag[i] <= ag[i - 1] and ag[i] <= ag[i + 1] and g[i - 1] * g[i + 1] > 0 and g[i] != 0:
            res = minimize_scalar(lambda t: g_of(t)[0] ** 2,
                                  bounds=(thetas[i - 1], thetas[i + 1]),
                                  method="bounded", options={"xatol": 1e-14})
            if abs(g_of(res.x)[0]) <= 1e-11 * scale:
                roots.append(res.x)
    return np.array(roots), changes


def _fibonacci_sphere(npts):
    i = np.arange(npts) + 0.5
    z = 1 - 2 * i / npts
    r = np.sqrt(1 - z * z)
    phi = np.pi * (1 + 5 ** 0.5) * i
    return np.column_stack([r * np.cos(phi), r * np.sin(phi), z])


_SPHERE_CACHE = {}


def _sphere(npts):
    if npts not in _SPHERE_CACHE:
        P = _fibonacci_sphere(npts)
        _, nbrs = cKDTree(P).query(P, k=9)
        _SPHERE_CACHE[npts] = (P, nbrs[:, 1:])
    return _SPHERE_CACHE[npts]


def _rayleigh(T, x):
    return poly_eval(T, x) / np.sum(x ** T.order)


def _rayleigh_opt(T, x0, sign):
    # extremize sign * T x^m / ||x||_m^m (even m) with BFGS
    m = T.order

    def f(x):
        nx = np.sum(x ** m)
        val = poly_eval(T, x) / nx
        grad = m * (grad_eval(T, x) - val * x ** (m - 1)) / nx
        return -sign * val, -sign * grad

    res = minimize(f, x0, jac=True, method="BFGS", options={"gtol": 1e-12})
    return res.x / np.linalg.norm(res.x)


def heig_all_small(T, npts=None, max_candidates=200):
    """All real H-eigenpairs of a tensor with ``n <= 3``, up to ``x -> -x``.

    For ``n = 2`` the eigen-directions are the zeros of a trigonometric
    polynomial and are bracketed exactly; for ``n = 3`` local minima of the
    eigen-residual on a Fibonacci sphere grid are polished by Newton's
    method. Raises :class:`NumericalError` when the grid misses solutions
    (fewer eigen-directions than sign changes for ``n = 2``; extremes of the
    H-Rayleigh quotient not matched by a found eigenvalue, even ``m``).
    """
    m, n = T.order, T.dim
    if m < 2:
        raise DimensionError("H-eigenvalues need order >= 2")
    if n > 3 or (n == 3 and m > 6):
        raise DimensionError(f"exhaustive search supports n <= 3 (m <= 6 at n = 3), got m={m}, n={n}")
    if n == 1:
        return [HEigenPair(float(T.generator[0]), np.ones(1), 0.0)]
    pairs = []
    if n == 2:
        roots, changes = _scan_circle(T, npts or 20000)
        if roots is None:
            # every direction is an eigenvector
            t = np.linspace(0, np.pi, 7)[:-1]
            X = np.column_stack([np.cos(t), np.sin(t)])
            _, _, lam, _ = _residual_rows(T, X)
            return _dedupe([_make_pair(T, x, l) for x, l in zip(X, lam)], tol=1e-9)
        X = np.column_stack([np.cos(roots), np.sin(roots)])
        _, _, lam, res = _residual_rows(T, X)
        rough = res > 1e-10
        if rough.any():
            X[rough], lam[rough], res[rough] = newton_rows(T, X[rough], lam[rough])
        pairs = [_make_pair(T, x, l) for x, l, r in zip(X, lam, res) if r <= RESIDUAL_TOL]
        pairs = _dedupe(pairs)
        if len(pairs) < changes:
            raise NumericalError(
                f"grid resolution insufficient: {changes} sign changes but "
                f"{len(pairs)} eigenpairs verified")
    else:
        P, nbrs = _sphere(npts or 40000)
        _, _, lam, res = _residual_rows(T, P)
        if res.max() <= 1e-12 * max(1.0, np.abs(T.generator).max()):
            return _dedupe([_make_pair(T, x, l) for x, l in zip(P[:50], lam[:50])], tol=1e-9)
        is_min = np.all(res[:, None] <= res[nbrs], axis=1)
        cand = np.flatnonzero(is_min)
        cand = cand[np.argsort(res[cand])][:max_candidates]
        X0 = P[cand]
        if m % 2 == 0:
            rq = np.einsum("ij,ij->i", grad_rows(T, P), P) / np.sum(P ** m, axis=1)
            extra = [_rayleigh_opt(T, P[i], sign)
                     for sign, i in ((-1, np.argmin(rq)), (1, np.argmax(rq)))]
            X0 = np.vstack([X0, extra])
        X, L, R = newton_rows(T, X0)
        pairs = [_make_pair(T, x, l) for x, l, r in zip(X, L, R)
                 if np.isfinite(r) and r <= RESIDUAL_TOL]
        pairs = _dedupe(pairs)
        if m % 2 == 0 and pairs:
            vals = [p.value for p in pairs]
            tol = 1e-7 * max(1.0, np.abs(rq).max())
            if rq.min() < min(vals) - tol or rq.max() > max(vals) + tol:
                raise NumericalError(
                    "grid resolution insufficient: Rayleigh-quotient extremes "
                    f"[{rq.min():.6g}, {rq.max():.6g}] outside found eigenvalues "
                    f"[{min(vals):.6g}, {max(vals):.6g}]")
    return pairs


# -- lift constants ---------------------------------------------------------

@dataclass(eq=False)
class LiftBoundConstants:
    c1: float
    c2: float
    m: int
    q: int
    k: int
    witness_min: np.ndarray
    witness_max: np.ndarray
    starts: int = 0
    start_range: tuple = (1.0, 1.0)
    distinct_optima: tuple = (1, 1)

    def to_json(self):
        d = asdict(self)
        d["witness_min"] = self.witness_min.tolist()
        d["witness_max"] = self.witness_max.tolist()
        return d


def lift_ratio(y, m, q):
    """``||y^{*q}||_m^m / ||y||_{qm}^{qm}`` (m even)."""
    y = np.asarray(y, dtype=float)
    return float(np.sum(conv_power(y, q) ** m) / np.sum(y ** (q * m)))


def _lift_ratio_rows(Y, m, q):
    W = conv_power_rows(Y, q)
    N = np.sum(W ** m, axis=1)
    D = np.sum(Y ** (q * m), axis=1)
    k = Y.shape[1]
    V = conv_power_rows(Y, q - 1)
    Wm = W ** (m - 1)
    # dN/dy_l = m q sum_j W^{m-1}_{l+j} V_j
    dN = m * q * np.stack([np.einsum("ij,ij->i", Wm[:, l:l + V.shape[1]], V)
                           for l in range(k)], axis=1)
    dD = q * m * Y ** (q * m - 1)
    R = N / D
    grad = (dN - R[:, None] * dD) / D[:, None]
    return R, grad


def _extremize_ratio(Y, m, q, sign, iters):
    Y = Y / np.linalg.norm(Y, axis=1, keepdims=True)
    R, G = _lift_ratio_rows(Y, m, q)
    t = np.full(Y.shape[0], 0.1)
    for _ in range(iters):
        Yn = Y + sign * t[:, None] * G
        Yn /= np.linalg.norm(Yn, axis=1, keepdims=True)
        Rn, Gn = _lift_ratio_rows(Yn, m, q)
        gain = sign * (Rn - R)
        ok = gain >= 1e-4 * t * np.einsum("ij,ij->i", G, G)
        Y[ok], R[ok], G[ok] = Yn[ok], Rn[ok], Gn[ok]
        t = np.where(ok, np.minimum(t * 1.5, 10.0), t * 0.5)
        if np.all(t < 1e-14):
            break
    return Y, R


@lru_cache(maxsize=128)
def _lift_cached(m, q, k, starts, seed, iters):
    return lift_constants(m, q, k, starts, seed, iters)


def lift_constants(m, q, k, starts=LIFT_STARTS, seed=0, iters=400):
    """Estimate ``c1 = min`` and ``c2 = max`` of ``||y^{*q}||_m^m / ||y||_{qm}^{qm}``
    over nonzero ``y`` in R^k by multi-start projected gradient on the
    sphere. ``q = 1`` or ``k = 1`` give exactly ``c1 = c2 = 1``."""
    if m % 2:
        raise StructureError(f"lift constants need even m, got {m}")
    if q < 1 or k < 1:
        raise DimensionError("q and k must be positive")
    e1 = np.zeros(k)
    e1[0] = 1.0
    if q == 1 or k == 1:
        return LiftBoundConstants(1.0, 1.0, m, q, k, e1, e1.copy())
    rng = np.random.default_rng(seed)
    Y0 = rng.standard_normal((starts, k))
    # coordinate axes and the all-ones direction are natural candidates
    Y0 = np.vstack([Y0, np.eye(k), np.ones((1, k))])
    R0, _ = _lift_ratio_rows(Y0 / np.linalg.norm(Y0, axis=1, keepdims=True), m, q)
    Ymin, Rmin = _extremize_ratio(Y0.copy(), m, q, -1.0, iters)
    Ymax, Rmax = _extremize_ratio(Y0.copy(), m, q, 1.0, iters)
    wmin = _canonical(Ymin[np.argmin(Rmin)])
    wmax = _canonical(Ymax[np.argmax(Rmax)])
    n_min = len(np.unique(np.round(Rmin, 8)))
    n_max = len(np.unique(np.round(Rmax, 8)))
    return LiftBoundConstants(
        lift_ratio(wmin, m, q), lift_ratio(wmax, m, q), m, q, k,
        wmin, wmax, Y0.shape[0], (float(R0.min()), float(R0.max())), (n_min, n_max))


# -- inheritance checks ------------------------------------------------------

def extremes(T, starts=DEFAULT_STARTS, seed=0):
    """``(lam_min, lam_max, method, pairs)``; values are None when no
    eigenvalue was found."""
    if T.order == 2:
        w, _ = sym_eig(associated_matrix(T))
        return float(w[-1]), float(w[0]), "sym_eig", None
    if T.dim <= 3 and not (T.dim == 3 and T.order > 6):
        pairs = heig_all_small(T)
        method = "exhaustive"
    else:
        pairs = heig_multistart(T, starts, seed).pairs
        method = "multistart"
    if not pairs:
        return None, None, method, pairs
    vals = [p.value for p in pairs]
    return float(min(vals)), float(max(vals)), method, pairs


def _bound(holds_value, bound_value, lower):
    if holds_value is None or bound_value is None:
        return None
    if lower:
        return bool(holds_value >= bound_value - BOUND_SLACK)
    return bool(holds_value <= bound_value + BOUND_SLACK)


@dataclass(eq=False)
class FirstInheritanceReport:
    low_order: int
    low_dim: int
    q: int
    high_order: int
    high_dim: int
    identity_max_rel_err: float
    samples: int
    low_min: float | None = None
    low_max: float | None = None
    high_min: float | None = None
    high_max: float | None = None
    low_method: str | None = None
    high_method: str | None = None
    constants: LiftBoundConstants | None = None
    high_psd: bool | None = None
    high_nsd: bool | None = None
    lower_c: float | None = None
    upper_c: float | None = None
    lower_bound: float | None = None
    upper_bound: float | None = None
    lower_holds: bool | None = None
    upper_holds: bool | None = None
    seed: int = 0

    def to_json(self):
        d = {k: v for k, v in self.__dict__.items() if k != "constants"}
        d["constants"] = self.constants.to_json() if self.constants else None
        d["tolerance"] = BOUND_SLACK
        return d


def _sign_tol(vals):
    return 1e-10 * max(1.0, max((abs(v) for v in vals if v is not None), default=1.0))


def check_first_inheritance(T_low, q, samples=100, seed=0, starts=DEFAULT_STARTS,
                            lift_starts=LIFT_STARTS):
    """Lift ``T_low`` (even order) to order ``q*m`` and test the product
    identity and the extremal-eigenvalue bounds."""
    if T_low.order % 2:
        raise StructureError(f"first inheritance needs even order, got {T_low.order}")
    T_high = higher_order_associate(T_low, q)
    rng = np.random.default_rng(seed)
    err = 0.0
    for _ in range(samples):
        y = rng.standard_normal(T_high.dim)
        lhs = poly_eval(T_high, y)
        rhs = poly_eval(T_low, conv_power(y, q))
        scale = np.abs(T_low.generator) @ np.abs(conv_power(y, T_high.order))
        err = max(err, abs(lhs - rhs) / max(scale, np.finfo(float).tiny))
    rep = FirstInheritanceReport(T_low.order, T_low.dim, q, T_high.order, T_high.dim,
                                 float(err), samples, seed=seed)
    low_ok = T_low.order == 2 or T_low.dim <= 3
    high_ok = T_high.dim <= 3
    if not (low_ok and high_ok):
        return rep
    rep.low_min, rep.low_max, rep.low_method, _ = extremes(T_low, starts, seed)
    rep.high_min, rep.high_max, rep.high_method, _ = extremes(T_high, starts, seed)
    C = _lift_cached(T_low.order, q, T_high.dim, lift_starts, seed, 400)
    rep.constants = C
    tol = _sign_tol([rep.high_min, rep.high_max])
    rep.high_psd = bool(rep.high_min >= -tol)
    rep.high_nsd = bool(rep.high_max <= tol)
    rep.lower_c = C.c1 if rep.high_psd else C.c2
    rep.upper_c = C.c1 if rep.high_nsd else C.c2
    rep.lower_bound = rep.lower_c * rep.low_min
    rep.upper_bound = rep.upper_c * rep.low_max
    rep.lower_holds = _bound(rep.high_min, rep.lower_bound, True)
    rep.upper_holds = _bound(rep.high_max, rep.upper_bound, False)
    return rep


@dataclass(eq=False)
class SecondInheritanceReport:
    order: int
    dim: int
    matrix_eigs: list
    matrix_class: str
    strong: bool
    search: dict
    exhaustive: list | None
    lam_min: float | None
    lam_max: float | None
    none_found: bool
    no_negative: bool | None
    c: float
    bound: float | None
    bound_holds: bool | None
    nsd_bound: float | None
    nsd_bound_holds: bool | None
    seed: int
    starts: int

    def to_json(self):
        d = dict(self.__dict__)
        d["tolerance"] = BOUND_SLACK
        return d


def _classify(w, tol):
    lo, hi = w[-1], w[0]
    if lo > tol:
        return "pd"
    if lo >= -tol:
        return "psd" if hi > tol else "zero"
    if hi < -tol:
        return "nd"
    if hi <= tol:
        return "nsd"
    return "indefinite"


def quantified_constant(m, n, starts=LIFT_STARTS, seed=0):
    """Constant in ``lam_min(T) >= c * lam_min(H)``: the minimum of
    ``||y^{*p}||_2^2 / ||y||_{2p}^{2p}`` over R^n with ``p = floor(m/2)``."""
    return _lift_cached(2, m // 2, n, starts, seed, 400).c1


def check_second_inheritance(T, starts=DEFAULT_STARTS, seed=0, lift_starts=LIFT_STARTS):
    """Compare the H-spectrum of ``T`` with the spectrum of its associated
    Hankel matrix."""
    H = associated_matrix(T)
    w, _ = sym_eig(H)
    tol = 1e-10 * max(1.0, np.abs(w).max())
    cls = _classify(w, tol)
    strong = cls in ("pd", "psd", "zero")
    ms = heig_multistart(T, starts, seed)
    vals = list(ms.values)
    exhaustive = None
    if T.dim <= 3 and not (T.dim == 3 and T.order > 6):
        ex = heig_all_small(T)
        exhaustive = [p.to_json() for p in ex]
        vals = [p.value for p in ex] + vals
    lam_min = float(min(vals)) if vals else None
    lam_max = float(max(vals)) if vals else None
    c = quantified_constant(T.order, T.dim, lift_starts, seed)
    bound = bound_holds = nsd_bound = nsd_holds = None
    if cls in ("pd", "psd", "zero"):
        bound = c * float(w[-1])
        bound_holds = _bound(lam_min, bound, True)
    if cls in ("nd", "nsd", "zero"):
        nsd_bound = c * float(w[0])
        nsd_holds = _bound(lam_max, nsd_bound, False)
    no_negative = None
    if strong:
        no_negative = bool(lam_min is None or lam_min >= -BOUND_SLACK)
    return SecondInheritanceReport(
        T.order, T.dim, w.tolist(), cls, strong, ms.to_json(), exhaustive,
        lam_min, lam_max, not vals, no_negative, c, bound, bound_holds,
        nsd_bound, nsd_holds, seed, starts)
