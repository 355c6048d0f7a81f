# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the iterative kernels.

Mirrors pybackend update-for-update; the pure loops avoid temporary
arrays and Python-level per-sample overhead in the hot paths.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport exp, fabs, pow, sqrt

cnp.import_array()

NAME = "native"


def hits_kernel(Py_ssize_t n, src, dst, double tol, int max_iter):
    cdef cnp.ndarray[cnp.intp_t, ndim=1] s = np.ascontiguousarray(src, dtype=np.intp)
    cdef cnp.ndarray[cnp.intp_t, ndim=1] d = np.ascontiguousarray(dst, dtype=np.intp)
    cdef Py_ssize_t n_edges = s.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] hub = np.ones(n)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] auth = np.ones(n)
    if n == 0:
        return hub, auth, 0, True
    if n_edges == 0:
        return np.zeros(n), np.zeros(n), 1, True

    cdef cnp.ndarray[cnp.float64_t, ndim=1] auth_new = np.zeros(n)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] hub_new = np.zeros(n)
    cdef Py_ssize_t e, i
    cdef int iterations = 0
    cdef bint converged = False
    cdef double norm_a, norm_h, delta, diff

    while iterations < max_iter:
        iterations += 1
        for i in range(n):
            auth_new[i] = 0.0
            hub_new[i] = 0.0
        for e in range(n_edges):
            auth_new[d[e]] += hub[s[e]]
        for e in range(n_edges):
            hub_new[s[e]] += auth_new[d[e]]
        norm_a = 0.0
        norm_h = 0.0
        for i in range(n):
            norm_a += auth_new[i] * auth_new[i]
            norm_h += hub_new[i] * hub_new[i]
        norm_a = sqrt(norm_a)
        norm_h = sqrt(norm_h)
        delta = 0.0
        for i in range(n):
            auth_new[i] /= norm_a
            hub_new[i] /= norm_h
            diff = fabs(auth_new[i] - auth[i])
            if diff > delta:
                delta = diff
            diff = fabs(hub_new[i] - hub[i])
            if diff > delta:
                delta = diff
        auth, auth_new = auth_new, auth
        hub, hub_new = hub_new, hub
        if delta < tol:
            converged = True
            break
    return hub, auth, iterations, converged


cdef inline double _dpow(double base, double expo) nogil:
    if expo == 1.0:
        return base
    if expo == 2.0:
        return base * base
    return pow(base, expo)


cdef void _centers(double[:, ::1] X, double[:, ::1] U, double m,
                   double[:, ::1] centers, double[::1] col_mean) nogil:
    cdef Py_ssize_t n = X.shape[0], dim = X.shape[1], c = U.shape[1]
    cdef Py_ssize_t i, j, k
    cdef double w, denom
    for k in range(c):
        denom = 0.0
        for j in range(dim):
            centers[k, j] = 0.0
        for i in range(n):
            w = _dpow(U[i, k], m)
            denom += w
            for j in range(dim):
                centers[k, j] += w * X[i, j]
        if denom <= 1e-300:
            for j in range(dim):
                centers[k, j] = col_mean[j]
        else:
            for j in range(dim):
                centers[k, j] /= denom


def fcm_kernel(X_in, U0, double m, double tol, int max_iter):
    cdef cnp.ndarray[cnp.float64_t, ndim=2] X = np.ascontiguousarray(X_in, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=2] U = np.array(U0, dtype=np.float64, order="C")
    cdef Py_ssize_t n = X.shape[0], dim = X.shape[1], c = U.shape[1]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] centers = np.zeros((c, dim))
    cdef cnp.ndarray[cnp.float64_t, ndim=2] U_new = np.zeros((n, c))
    cdef cnp.ndarray[cnp.float64_t, ndim=2] d2 = np.zeros((n, c))
    cdef cnp.ndarray[cnp.float64_t, ndim=1] col_mean = X.mean(axis=0)
    cdef double expo = 1.0 / (m - 1.0)
    cdef Py_ssize_t i, j, k, kk, n_zero
    cdef int iterations = 0
    cdef double diff, dist, acc, obj, delta, u
    trace = []

    while iterations < max_iter:
        iterations += 1
        _centers(X, U, m, centers, col_mean)
        for i in range(n):
            for k in range(c):
                dist = 0.0
                for j in range(dim):
                    diff = X[i, j] - centers[k, j]
                    dist += diff * diff
                d2[i, k] = dist
        obj = 0.0
        delta = 0.0
        for i in range(n):
            n_zero = 0
            for k in range(c):
                if d2[i, k] <= 1e-300:
                    n_zero += 1
            if n_zero > 0:
                for k in range(c):
                    U_new[i, k] = (1.0 / n_zero) if d2[i, k] <= 1e-300 else 0.0
            else:
                for k in range(c):
                    acc = 0.0
                    for kk in range(c):
                        acc += _dpow(d2[i, k] / d2[i, kk], expo)
                    U_new[i, k] = 1.0 / acc
            for k in range(c):
                u = U_new[i, k]
                obj += _dpow(u, m) * d2[i, k]
                diff = fabs(u - U[i, k])
                if diff > delta:
                    delta = diff
                U[i, k] = u
        trace.append(obj)
        if delta < tol:
            break
    _centers(X, U, m, centers, col_mean)
    return np.asarray(U), np.asarray(centers), np.array(trace), iterations


def mlp_kernel(X_in, T_in, W1_in, b1_in, W2_in, b2_in, int epochs, double rate):
    cdef double[:, ::1] X = np.ascontiguousarray(X_in, dtype=np.float64)
    cdef double[:, ::1] T = np.ascontiguousarray(T_in, dtype=np.float64)
    cdef double[:, ::1] W1 = W1_in
    cdef double[::1] b1 = b1_in
    cdef double[:, ::1] W2 = W2_in
    cdef double[::1] b2 = b2_in
    cdef Py_ssize_t n = X.shape[0], dim = X.shape[1]
    cdef Py_ssize_t h = W1.shape[0], out = W2.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] a1 = np.zeros(h)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] y = np.zeros(out)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] delta2 = np.zeros(out)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] delta1 = np.zeros(h)
    cdef Py_ssize_t ep, i, j, k
    cdef double z

    for ep in range(epochs):
        for i in range(n):
            for j in range(h):
                z = b1[j]
                for k in range(dim):
                    z += W1[j, k] * X[i, k]
                a1[j] = 1.0 / (1.0 + exp(-z))
            for j in range(out):
                z = b2[j]
                for k in range(h):
                    z += W2[j, k] * a1[k]
                y[j] = 1.0 / (1.0 + exp(-z))
            for j in range(out):
                delta2[j] = (y[j] - T[i, j]) * y[j] * (1.0 - y[j])
            for j in range(h):
                z = 0.0
                for k in range(out):
                    z += W2[k, j] * delta2[k]
                delta1[j] = z * a1[j] * (1.0 - a1[j])
            for j in range(out):
                for k in range(h):
                    W2[j, k] -= rate * delta2[j] * a1[k]
                b2[j] -= rate * delta2[j]
            for j in range(h):
                for k in range(dim):
                    W1[j, k] -= rate * delta1[j] * X[i, k]
                b1[j] -= rate * delta1[j]
