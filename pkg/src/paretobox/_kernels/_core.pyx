# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled hot kernels: all-pairs Pareto filtering and diagonal-GMM EM.

Contracts match `_fallback`; see that module for documentation.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport exp, fabs, log

cnp.import_array()

NAME = "compiled"

cdef double _LOG_2PI = 1.8378770664093453


def pareto_mask(costs):
    costs = np.ascontiguousarray(costs, dtype=np.float64)
    cdef double[:, ::1] c = costs
    cdef Py_ssize_t n = c.shape[0]
    cdef Py_ssize_t k = c.shape[1]
    mask_arr = np.ones(n, dtype=np.uint8)
    cdef unsigned char[::1] mask = mask_arr
    cdef Py_ssize_t i, j, m
    cdef bint all_le, any_lt
    for i in range(n):
        if not mask[i]:
            continue
        for j in range(n):
            if j == i or not mask[j]:
                continue
            all_le = True
            any_lt = False
            for m in range(k):
                if c[i, m] > c[j, m]:
                    all_le = False
                    break
                if c[i, m] < c[j, m]:
                    any_lt = True
            if all_le and any_lt:
                mask[j] = 0
    return mask_arr.astype(bool)


def em_fit_diag(x, weights, means, variances, double floor,
                int max_iters, double tol):
    x = np.ascontiguousarray(x, dtype=np.float64)
    w_arr = np.array(weights, dtype=np.float64)
    mu_arr = np.array(means, dtype=np.float64)
    var_arr = np.maximum(np.array(variances, dtype=np.float64), floor)

    cdef double[:, ::1] xv = x
    cdef double[::1] w = w_arr
    cdef double[:, ::1] mu = mu_arr
    cdef double[:, ::1] var = var_arr
    cdef Py_ssize_t n = xv.shape[0]
    cdef Py_ssize_t d = xv.shape[1]
    cdef Py_ssize_t k = w.shape[0]

    log_prob_arr = np.empty((n, k), dtype=np.float64)
    resp_arr = np.empty((n, k), dtype=np.float64)
    log_norm_arr = np.empty(k, dtype=np.float64)
    counts_arr = np.empty(k, dtype=np.float64)
    cdef double[:, ::1] log_prob = log_prob_arr
    cdef double[:, ::1] resp = resp_arr
    cdef double[::1] log_norm = log_norm_arr
    cdef double[::1] counts = counts_arr

    lls = []
    cdef double prev = 0.0
    cdef bint have_prev = False
    cdef double ll, acc, peak, diff, lse, s
    cdef Py_ssize_t it, i, j, m

    for it in range(max_iters):
        for j in range(k):
            acc = 0.0
            for m in range(d):
                acc += log(var[j, m])
            log_norm[j] = -0.5 * (d * _LOG_2PI + acc)
        ll = 0.0
        for i in range(n):
            for j in range(k):
                acc = 0.0
                for m in range(d):
                    diff = xv[i, m] - mu[j, m]
                    acc += diff * diff / var[j, m]
                log_prob[i, j] = log(w[j]) + log_norm[j] - 0.5 * acc
            peak = log_prob[i, 0]
            for j in range(1, k):
                if log_prob[i, j] > peak:
                    peak = log_prob[i, j]
            s = 0.0
            for j in range(k):
                s += exp(log_prob[i, j] - peak)
            lse = peak + log(s)
            ll += lse
            for j in range(k):
                resp[i, j] = exp(log_prob[i, j] - lse)
        lls.append(ll)
        if have_prev and fabs(ll - prev) < tol:
            break
        prev = ll
        have_prev = True

        for j in range(k):
            acc = 0.0
            for i in range(n):
                acc += resp[i, j]
            if acc < 1e-300:
                acc = 1e-300
            counts[j] = acc
            w[j] = acc / n
        for j in range(k):
            for m in range(d):
                acc = 0.0
                for i in range(n):
                    acc += resp[i, j] * xv[i, m]
                mu[j, m] = acc / counts[j]
        for j in range(k):
            for m in range(d):
                acc = 0.0
                for i in range(n):
                    diff = xv[i, m] - mu[j, m]
                    acc += resp[i, j] * diff * diff
                acc = acc / counts[j]
                var[j, m] = acc if acc > floor else floor

    return w_arr, mu_arr, var_arr, np.asarray(lls)
