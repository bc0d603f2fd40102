# cython: language_level=3
"""Compiled kernels; same contract and arithmetic order as ``_pykernels``."""
import numpy as np
cimport numpy as cnp

cnp.import_array()

BACKEND = "cython"


def divided_differences(const double[::1] x, const double[::1] y):
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t i, k
    table = np.zeros((n, n))
    cdef double[:, ::1] T = table
    for i in range(n):
        T[0, i] = y[i]
    for k in range(1, n):
        for i in range(n - k):
            T[k, i] = (T[k - 1, i + 1] - T[k - 1, i]) / (x[i + k] - x[i])
    return table


def newton_eval(const double[::1] centers, const double[::1] coeffs, const double[::1] t):
    cdef Py_ssize_t m = coeffs.shape[0] - 1
    cdef Py_ssize_t nt = t.shape[0]
    cdef Py_ssize_t q, k
    cdef double p, tq
    out = np.empty(nt)
    cdef double[::1] o = out
    for q in range(nt):
        tq = t[q]
        p = coeffs[m]
        for k in range(m - 1, -1, -1):
            p = coeffs[k] + (tq - centers[k]) * p
        o[q] = p
    return out


def lagrange_eval(const double[::1] x, const double[::1] y, const double[::1] t):
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t nt = t.shape[0]
    cdef Py_ssize_t q, i, j, hit
    cdef double s, li, xi, tq
    out = np.empty(nt)
    cdef double[::1] o = out
    for q in range(nt):
        tq = t[q]
        hit = -1
        for i in range(n):
            if tq == x[i]:
                hit = i
                break
        if hit >= 0:
            o[q] = y[hit]
            continue
        s = 0.0
        for i in range(n):
            li = 1.0
            xi = x[i]
            for j in range(n):
                if j != i:
                    li = li * ((tq - x[j]) / (xi - x[j]))
            s = s + y[i] * li
        o[q] = s
    return out


def neville(const double[::1] x, const double[::1] y, double t):
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t i, j, k
    table = np.zeros((n, n))
    cdef double[:, ::1] P = table
    for i in range(n):
        P[i, 0] = y[i]
    for k in range(1, n):
        for i in range(n - k):
            j = i + k
            P[i, k] = ((t - x[i]) * P[i + 1, k - 1] - (t - x[j]) * P[i, k - 1]) / (x[j] - x[i])
    return table


def natural_spline(const double[::1] x, const double[::1] a):
    cdef Py_ssize_t n = x.shape[0] - 1
    cdef Py_ssize_t i, j
    cdef double alpha, l
    h_arr = np.empty(n)
    mu_arr = np.empty(n + 1)
    z_arr = np.empty(n + 1)
    c_arr = np.empty(n + 1)
    b_arr = np.empty(n)
    d_arr = np.empty(n)
    cdef double[::1] h = h_arr, mu = mu_arr, z = z_arr
    cdef double[::1] c = c_arr, b = b_arr, d = d_arr
    for i in range(n):
        h[i] = x[i + 1] - x[i]
    mu[0] = 0.0
    z[0] = 0.0
    for i in range(1, n):
        alpha = 3.0 / h[i] * (a[i + 1] - a[i]) - 3.0 / h[i - 1] * (a[i] - a[i - 1])
        l = 2.0 * (x[i + 1] - x[i - 1]) - h[i - 1] * mu[i - 1]
        mu[i] = h[i] / l
        z[i] = (alpha - h[i - 1] * z[i - 1]) / l
    c[n] = 0.0
    for j in range(n - 1, -1, -1):
        c[j] = z[j] - mu[j] * c[j + 1]
        b[j] = (a[j + 1] - a[j]) / h[j] - h[j] * (c[j + 1] + 2.0 * c[j]) / 3.0
        d[j] = (c[j + 1] - c[j]) / (3.0 * h[j])
    return b_arr, c_arr[:n], d_arr


cdef inline Py_ssize_t _locate(const double[::1] xs, Py_ssize_t n, double tq) nogil:
    cdef Py_ssize_t lo = 0, hi = n + 1, mid, j
    while lo < hi:
        mid = (lo + hi) // 2
        if tq < xs[mid]:
            hi = mid
        else:
            lo = mid + 1
    j = lo - 1
    if j < 0:
        return 0
    if j > n - 1:
        return n - 1
    return j


def spline_eval(const double[::1] knots, const double[::1] a, const double[::1] b,
                const double[::1] c, const double[::1] d, const double[::1] t, int order):
    cdef Py_ssize_t n = knots.shape[0] - 1
    cdef Py_ssize_t nt = t.shape[0]
    cdef Py_ssize_t q, j
    cdef double dx, tq
    out = np.empty(nt)
    cdef double[::1] o = out
    with nogil:
        for q in range(nt):
            tq = t[q]
            j = _locate(knots, n, tq)
            dx = tq - knots[j]
            if order == 0:
                o[q] = a[j] + dx * (b[j] + dx * (c[j] + dx * d[j]))
            elif order == 1:
                o[q] = b[j] + dx * (2.0 * c[j] + 3.0 * d[j] * dx)
            else:
                o[q] = 2.0 * c[j] + 6.0 * d[j] * dx
    return out


def hermite_eval(const double[::1] x, const double[::1] y, const double[::1] dy,
                 const double[::1] t):
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t nt = t.shape[0]
    cdef Py_ssize_t q, j, k
    cdef double s, acc, xj, lj, l2, u, tq
    dl_arr = np.zeros(n)
    cdef double[::1] dl = dl_arr
    for j in range(n):
        s = 0.0
        for k in range(n):
            if k != j:
                s = s + 1.0 / (x[j] - x[k])
        dl[j] = s
    out = np.empty(nt)
    cdef double[::1] o = out
    for q in range(nt):
        tq = t[q]
        acc = 0.0
        for j in range(n):
            xj = x[j]
            lj = 1.0
            for k in range(n):
                if k != j:
                    lj = lj * ((tq - x[k]) / (xj - x[k]))
            l2 = lj * lj
            u = tq - xj
            acc = acc + y[j] * ((1.0 - 2.0 * u * dl[j]) * l2) + dy[j] * (u * l2)
        o[q] = acc
    return out
