"""Pure-Python versions of the compiled kernels in ``_kernels.pyx``.

Same algorithms, same update order, same stopping rules. Used when the
extension is not built or ``HANKELTENSOR_PURE_PYTHON`` is set.
"""

import math

import numpy as np

EPS = np.finfo(float).eps


def conv_direct(u, v):
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    out = np.zeros(len(u) + len(v) - 1)
    for i, ui in enumerate(u):
        out[i:i + len(v)] += ui * v
    return out


def hankel_correlate(h, w, n):
    h = np.asarray(h, dtype=float)
    w = np.asarray(w, dtype=float)
    if len(h) < n - 1 + len(w):
        raise ValueError("generator too short for correlation")
    return np.array([h[i:i + len(w)] @ w for i in range(n)])


def jacobi_eigh(a_in, max_sweeps):
    a = np.array(a_in, dtype=float, copy=True)
    n = a.shape[0]
    v = np.eye(n)
    sweep = 0
    while sweep < max_sweeps:
        sweep += 1
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                app = a[p, p]
                aqq = a[q, q]
                if abs(apq) <= 0.5 * EPS * math.sqrt(abs(app * aqq)) or apq == 0.0:
                    continue
                rotated = True
                theta = (aqq - app) / (2.0 * apq)
                if theta >= 0:
                    t = 1.0 / (theta + math.hypot(1.0, theta))
                else:
                    t = -1.0 / (-theta + math.hypot(1.0, theta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                colp = a[:, p].copy()
                colq = a[:, q].copy()
                newp = c * colp - s * colq
                newq = s * colp + c * colq
                a[:, p] = newp
                a[p, :] = newp
                a[:, q] = newq
                a[q, :] = newq
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
        if not rotated:
            break
    return np.diag(a).copy(), v, sweep


def bjorck_pereyra(x, b_in):
    x = np.asarray(x, dtype=float)
    b = np.array(b_in, dtype=float, copy=True)
    n = len(x) - 1
    for k in range(n):
        for i in range(n, k, -1):
            b[i] -= x[k] * b[i - 1]
    for k in range(n - 1, -1, -1):
        for i in range(k + 1, n + 1):
            b[i] /= x[i] - x[i - k - 1]
        for i in range(k, n):
            b[i] -= b[i + 1]
    return b


def _horner(c, z):
    pv = c[0]
    dv = 0j
    for ci in c[1:]:
        dv = dv * z + pv
        pv = pv * z + ci
    return pv, dv


def aberth(coeffs, z0, max_iter, atol):
    c = [complex(ci) for ci in coeffs]
    z = [complex(zi) for zi in z0]
    r = len(z)
    done = [False] * r
    remaining = r
    it = 0
    while it < max_iter and remaining > 0:
        it += 1
        for i in range(r):
            if done[i]:
                continue
            pv, dv = _horner(c, z[i])
            if pv == 0:
                done[i] = True
                remaining -= 1
                continue
            ratio = pv / dv if dv != 0 else pv
            s = 0j
            for j in range(r):
                if j != i:
                    s += 1.0 / (z[i] - z[j])
            w = ratio / (1.0 - ratio * s)
            z[i] = z[i] - w
            if abs(w) <= 4.0 * EPS * abs(z[i]) + atol:
                done[i] = True
                remaining -= 1
    return np.array(z, dtype=complex), it
