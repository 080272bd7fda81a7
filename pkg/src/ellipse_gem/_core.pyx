# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels: graphical-lasso coordinate descent and L1 assignment.

Semantics must match ``_pykernels`` exactly; the backend is selected at
import time in ``_kernels``.
"""

import numpy as np

from libc.math cimport fabs


def glasso_sweep(double[:, ::1] S, double[:, ::1] W, double[:, ::1] B,
                 double lam, double inner_eps, int inner_max):
    """One full block-coordinate-descent sweep of the graphical lasso.

    ``W`` is the working covariance (diagonal pinned to ``diag(S)``) and
    ``B[:, j]`` the lasso coefficients of column ``j``; both are updated in
    place.  Returns the mean absolute change of the off-diagonal entries
    of ``W`` over the sweep.
    """
    cdef Py_ssize_t p = S.shape[0]
    cdef double[::1] q = np.empty(p, dtype=np.float64)
    cdef double total_change = 0.0
    cdef Py_ssize_t j, a, b
    cdef int it
    cdef double beta_a, new_a, r, diff, viol, worst

    if p <= 1:
        return 0.0
    for j in range(p):
        # q = W @ B[:, j]; B[j, j] is always zero
        for a in range(p):
            r = 0.0
            for b in range(p):
                r += W[a, b] * B[b, j]
            q[a] = r
        for it in range(inner_max):
            for a in range(p):
                if a == j:
                    continue
                beta_a = B[a, j]
                r = S[a, j] - (q[a] - W[a, a] * beta_a)
                if r > lam:
                    new_a = (r - lam) / W[a, a]
                elif r < -lam:
                    new_a = (r + lam) / W[a, a]
                else:
                    new_a = 0.0
                diff = new_a - beta_a
                if diff != 0.0:
                    B[a, j] = new_a
                    for b in range(p):
                        q[b] += W[b, a] * diff
            # stationarity residual of this column's lasso
            worst = 0.0
            for a in range(p):
                if a == j:
                    continue
                r = q[a] - S[a, j]
                if B[a, j] > 0.0:
                    viol = fabs(r + lam)
                elif B[a, j] < 0.0:
                    viol = fabs(r - lam)
                else:
                    viol = fabs(r) - lam
                    if viol < 0.0:
                        viol = 0.0
                if viol > worst:
                    worst = viol
            if worst <= inner_eps:
                break
        for a in range(p):
            if a != j:
                total_change += fabs(q[a] - W[a, j])
                W[a, j] = q[a]
                W[j, a] = q[a]
    return total_change / (p * (p - 1))


def l1_assign(double[:, ::1] X, double[:, ::1] M, long long[::1] support):
    """Assign each row of ``X`` to the L1-nearest row of ``M`` on ``support``.

    Ties go to the lowest cluster index.  Returns ``(labels, costs)``.
    """
    cdef Py_ssize_t n = X.shape[0]
    cdef Py_ssize_t K = M.shape[0]
    cdef Py_ssize_t ns = support.shape[0]
    labels_arr = np.empty(n, dtype=np.int64)
    costs_arr = np.empty(n, dtype=np.float64)
    cdef long long[::1] labels = labels_arr
    cdef double[::1] costs = costs_arr
    cdef Py_ssize_t i, k, t, j
    cdef long long best_k
    cdef double s, best

    for i in range(n):
        best = 0.0
        best_k = 0
        for k in range(K):
            s = 0.0
            for t in range(ns):
                j = support[t]
                s += fabs(X[i, j] - M[k, j])
            if k == 0 or s < best:
                best = s
                best_k = k
        labels[i] = best_k
        costs[i] = best
    return labels_arr, costs_arr
