# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops.

Every function here has a line-for-line twin in ``_kernels_py``; the two are
selected between in ``_backend`` and must return the same results up to
rounding.
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport fabs, sqrt, hypot

cnp.import_array()

cdef double EPS = 2.220446049250313e-16


def conv_direct(const double[::1] u, const double[::1] v):
    cdef Py_ssize_t nu = u.shape[0], nv = v.shape[0], i, j
    out = np.zeros(nu + nv - 1)
    cdef double[::1] w = out
    cdef double ui
    for i in range(nu):
        ui = u[i]
        for j in range(nv):
            w[i + j] += ui * v[j]
    return out


def hankel_correlate(const double[::1] h, const double[::1] w, Py_ssize_t n):
    # out[i] = sum_j h[i + j] * w[j]
    cdef Py_ssize_t nw = w.shape[0], i, j
    if h.shape[0] < n - 1 + nw:
        raise ValueError("generator too short for correlation")
    out = np.zeros(n)
    cdef double[::1] o = out
    cdef double acc
    for i in range(n):
        acc = 0.0
        for j in range(nw):
            acc += h[i + j] * w[j]
        o[i] = acc
    return out


def jacobi_eigh(a_in, int max_sweeps):
    """Cyclic-by-row Jacobi on a symmetric matrix.

    Returns ``(eigenvalues, eigenvectors, sweeps)`` unsorted. A rotation is
    applied whenever ``|a_pq| > eps/2 * sqrt(|a_pp a_qq|)``; iteration stops
    after a sweep with no rotations or after ``max_sweeps``.
    """
    A_arr = np.array(a_in, dtype=np.float64, order="C", copy=True)
    cdef double[:, ::1] a = A_arr
    cdef Py_ssize_t n = a.shape[0], p, q, k, sweep
    V_arr = np.eye(n)
    cdef double[:, ::1] v = V_arr
    cdef double apq, app, aqq, theta, t, c, s, akp, akq
    cdef bint rotated

    sweep = 0
    while sweep < max_sweeps:
        sweep += 1
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                app = a[p, p]
                aqq = a[q, q]
                if fabs(apq) <= 0.5 * EPS * sqrt(fabs(app * aqq)) or apq == 0.0:
                    continue
                rotated = True
                theta = (aqq - app) / (2.0 * apq)
                if theta >= 0:
                    t = 1.0 / (theta + hypot(1.0, theta))
                else:
                    t = -1.0 / (-theta + hypot(1.0, theta))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                for k in range(n):
                    if k == p or k == q:
                        continue
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[p, k] = a[k, p]
                    a[k, q] = s * akp + c * akq
                    a[q, k] = a[k, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for k in range(n):
                    akp = v[k, p]
                    akq = v[k, q]
                    v[k, p] = c * akp - s * akq
                    v[k, q] = s * akp + c * akq
        if not rotated:
            break
    return np.diag(A_arr).copy(), V_arr, sweep


def bjorck_pereyra(const double[::1] x, b_in):
    """Solve ``sum_k alpha_k x_k**j = b_j`` (j = 0..r-1) in O(r^2)."""
    b_arr = np.array(b_in, dtype=np.float64, copy=True)
    cdef double[::1] b = b_arr
    cdef Py_ssize_t n = x.shape[0] - 1, i, k
    for k in range(n):
        for i in range(n, k, -1):
            b[i] -= x[k] * b[i - 1]
    for k in range(n - 1, -1, -1):
        for i in range(k + 1, n + 1):
            b[i] /= x[i] - x[i - k - 1]
        for i in range(k, n):
            b[i] -= b[i + 1]
    return b_arr


cdef inline void _horner(double complex[::1] c, double complex z,
                         double complex* p, double complex* dp) nogil:
    cdef Py_ssize_t i, deg = c.shape[0] - 1
    cdef double complex pv = c[0], dv = 0
    for i in range(1, deg + 1):
        dv = dv * z + pv
        pv = pv * z + c[i]
    p[0] = pv
    dp[0] = dv


def aberth(coeffs, z0, int max_iter, double atol):
    """Aberth–Ehrlich iteration with Gauss–Seidel updates.

    ``coeffs`` are highest-degree first. Returns ``(roots, iterations)``; a
    root is frozen once its correction falls below ``4 eps |z| + atol``.
    """
    c_arr = np.ascontiguousarray(coeffs, dtype=np.complex128)
    z_arr = np.array(z0, dtype=np.complex128, copy=True)
    cdef double complex[::1] c = c_arr
    cdef double complex[::1] z = z_arr
    cdef Py_ssize_t r = z.shape[0], i, j, it
    done_arr = np.zeros(r, dtype=np.uint8)
    cdef unsigned char[::1] done = done_arr
    cdef double complex pv, dv, ratio, s, w
    cdef Py_ssize_t remaining = r
    it = 0
    while it < max_iter and remaining > 0:
        it += 1
        for i in range(r):
            if done[i]:
                continue
            _horner(c, z[i], &pv, &dv)
            if pv == 0:
                done[i] = 1
                remaining -= 1
                continue
            ratio = pv / dv if dv != 0 else pv
            s = 0
            for j in range(r):
                if j != i:
                    s = s + 1.0 / (z[i] - z[j])
            w = ratio / (1.0 - ratio * s)
            z[i] = z[i] - w
            if abs(w) <= 4.0 * EPS * abs(z[i]) + atol:
                done[i] = 1
                remaining -= 1
    return z_arr, it
