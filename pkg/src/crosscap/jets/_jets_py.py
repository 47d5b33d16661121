"""Pure-NumPy truncated Taylor-jet kernels.

A jet array has shape (K+1, M): K+1 Taylor coefficients (value first,
divided by factorials) sampled at M grid points.  Products are truncated
convolutions; division and square root use the standard power-series
recurrences.  This module is the fallback backend; the compiled extension
implements the same three kernels.
"""
import numpy as np

BACKEND = "python"


def jet_mul(a, b):
    k1, m = a.shape
    out = np.zeros_like(a)
    for k in range(k1):
        for i in range(k + 1):
            out[k] += a[i] * b[k - i]
    return out


def jet_div(a, b):
    k1, m = a.shape
    out = np.empty_like(a)
    inv0 = 1.0 / b[0]
    out[0] = a[0] * inv0
    for k in range(1, k1):
        acc = a[k].copy()
        for i in range(1, k + 1):
            acc -= b[i] * out[k - i]
        out[k] = acc * inv0
    return out


def jet_sqrt(a):
    k1, m = a.shape
    out = np.empty_like(a)
    out[0] = np.sqrt(a[0])
    half_inv = 0.5 / out[0]
    for k in range(1, k1):
        acc = a[k].copy()
        for i in range(1, k):
            acc -= out[i] * out[k - i]
        out[k] = acc * half_inv
    return out
