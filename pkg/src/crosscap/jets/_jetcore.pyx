# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled truncated Taylor-jet kernels (see _jets_py for the reference)."""
import numpy as np
cimport numpy as cnp

BACKEND = "cython"


def jet_mul(double[:, ::1] a, double[:, ::1] b):
    cdef Py_ssize_t K = a.shape[0], M = a.shape[1]
    out_arr = np.zeros((K, M), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t k, i, j
    cdef double acc
    for j in range(M):
        for k in range(K):
            acc = 0.0
            for i in range(k + 1):
                acc += a[i, j] * b[k - i, j]
            out[k, j] = acc
    return out_arr


def jet_div(double[:, ::1] a, double[:, ::1] b):
    cdef Py_ssize_t K = a.shape[0], M = a.shape[1]
    out_arr = np.empty((K, M), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t k, i, j
    cdef double acc, inv0
    for j in range(M):
        inv0 = 1.0 / b[0, j]
        out[0, j] = a[0, j] * inv0
        for k in range(1, K):
            acc = a[k, j]
            for i in range(1, k + 1):
                acc -= b[i, j] * out[k - i, j]
            out[k, j] = acc * inv0
    return out_arr


def jet_sqrt(double[:, ::1] a):
    cdef Py_ssize_t K = a.shape[0], M = a.shape[1]
    out_arr = np.empty((K, M), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t k, i, j
    cdef double acc, half_inv
    for j in range(M):
        out[0, j] = a[0, j] ** 0.5
        half_inv = 0.5 / out[0, j]
        for k in range(1, K):
            acc = a[k, j]
            for i in range(1, k):
                acc -= out[i, j] * out[k - i, j]
            out[k, j] = acc * half_inv
    return out_arr
