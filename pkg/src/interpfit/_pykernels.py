"""Pure-Python reference kernels.

These mirror ``_ckernels.pyx`` operation for operation, so both backends
produce bit-identical results. Inputs are assumed validated by the caller
(float64 1-D arrays, distinct nodes); nothing here checks them.
"""
import numpy as np

BACKEND = "python"


def divided_differences(x, y):
    """Triangular table ``T[k, i] = f[x_i, ..., x_{i+k}]`` (unused slots are 0)."""
    xs = x.tolist()
    n = len(xs)
    table = [[0.0] * n for _ in range(n)]
    table[0][:] = y.tolist()
    for k in range(1, n):
        prev = table[k - 1]
        row = table[k]
        for i in range(n - k):
            row[i] = (prev[i + 1] - prev[i]) / (xs[i + k] - xs[i])
    return np.array(table, dtype=np.float64).reshape(n, n)


def newton_eval(centers, coeffs, t):
    cs = centers.tolist()
    cf = coeffs.tolist()
    m = len(cf) - 1
    out = np.empty(len(t))
    for q, tq in enumerate(t.tolist()):
        p = cf[m]
        for k in range(m - 1, -1, -1):
            p = cf[k] + (tq - cs[k]) * p
        out[q] = p
    return out


def lagrange_eval(x, y, t):
    xs = x.tolist()
    ys = y.tolist()
    n = len(xs)
    out = np.empty(len(t))
    for q, tq in enumerate(t.tolist()):
        hit = -1
        for i in range(n):
            if tq == xs[i]:
                hit = i
                break
        if hit >= 0:
            out[q] = ys[hit]
            continue
        s = 0.0
        for i in range(n):
            li = 1.0
            xi = xs[i]
            for j in range(n):
                if j != i:
                    li = li * ((tq - xs[j]) / (xi - xs[j]))
            s = s + ys[i] * li
        out[q] = s
    return out


def neville(x, y, t):
    """Tableau ``P[i, k]`` = value at ``t`` of the interpolant through nodes i..i+k."""
    xs = x.tolist()
    n = len(xs)
    P = [[0.0] * n for _ in range(n)]
    for i, yi in enumerate(y.tolist()):
        P[i][0] = yi
    for k in range(1, n):
        for i in range(n - k):
            j = i + k
            P[i][k] = ((t - xs[i]) * P[i + 1][k - 1] - (t - xs[j]) * P[i][k - 1]) / (xs[j] - xs[i])
    return np.array(P, dtype=np.float64).reshape(n, n)


def natural_spline(x, a):
    """Natural cubic spline sweep; returns per-interval ``(b, c, d)``."""
    xs = x.tolist()
    av = a.tolist()
    n = len(xs) - 1
    h = [xs[i + 1] - xs[i] for i in range(n)]
    alpha = [0.0] * (n + 1)
    for i in range(1, n):
        alpha[i] = 3.0 / h[i] * (av[i + 1] - av[i]) - 3.0 / h[i - 1] * (av[i] - av[i - 1])
    l = [1.0] * (n + 1)
    mu = [0.0] * (n + 1)
    z = [0.0] * (n + 1)
    for i in range(1, n):
        l[i] = 2.0 * (xs[i + 1] - xs[i - 1]) - h[i - 1] * mu[i - 1]
        mu[i] = h[i] / l[i]
        z[i] = (alpha[i] - h[i - 1] * z[i - 1]) / l[i]
    c = [0.0] * (n + 1)
    b = [0.0] * n
    d = [0.0] * n
    for j in range(n - 1, -1, -1):
        c[j] = z[j] - mu[j] * c[j + 1]
        b[j] = (av[j + 1] - av[j]) / h[j] - h[j] * (c[j + 1] + 2.0 * c[j]) / 3.0
        d[j] = (c[j + 1] - c[j]) / (3.0 * h[j])
    return np.array(b), np.array(c[:n]), np.array(d)


def _locate(xs, n, tq):
    # largest j with xs[j] <= tq, clipped to [0, n - 1]
    lo, hi = 0, n + 1
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


def spline_eval(knots, a, b, c, d, t, order):
    xs = knots.tolist()
    av, bv, cv, dv = a.tolist(), b.tolist(), c.tolist(), d.tolist()
    n = len(xs) - 1
    out = np.empty(len(t))
    for q, tq in enumerate(t.tolist()):
        j = _locate(xs, n, tq)
        dx = tq - xs[j]
        if order == 0:
            out[q] = av[j] + dx * (bv[j] + dx * (cv[j] + dx * dv[j]))
        elif order == 1:
            out[q] = bv[j] + dx * (2.0 * cv[j] + 3.0 * dv[j] * dx)
        else:
            out[q] = 2.0 * cv[j] + 6.0 * dv[j] * dx
    return out


def hermite_eval(x, y, dy, t):
    xs = x.tolist()
    ys = y.tolist()
    dys = dy.tolist()
    n = len(xs)
    dl = [0.0] * n
    for j in range(n):
        s = 0.0
        for k in range(n):
            if k != j:
                s = s + 1.0 / (xs[j] - xs[k])
        dl[j] = s
    out = np.empty(len(t))
    for q, tq in enumerate(t.tolist()):
        acc = 0.0
        for j in range(n):
            xj = xs[j]
            lj = 1.0
            for k in range(n):
                if k != j:
                    lj = lj * ((tq - xs[k]) / (xj - xs[k]))
            l2 = lj * lj
            u = tq - xj
            acc = acc + ys[j] * ((1.0 - 2.0 * u * dl[j]) * l2) + dys[j] * (u * l2)
        out[q] = acc
    return out
