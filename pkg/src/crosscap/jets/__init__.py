"""Taylor-jet arithmetic over theta grids.

The three inner kernels (mul/div/sqrt of truncated series) run either in
the compiled extension or the NumPy fallback; `CROSSCAP_JETS=python`
forces the fallback.  Everything above the kernels (seeding, derivative
shift, vector algebra, polynomial evaluation) is backend-independent.

Convention: a jet is an ndarray of shape (K+1, M) holding Taylor
coefficients f^(k)(theta)/k! at M grid points, so the k-th derivative is
k! * jet[k].
"""
import math
import os

import numpy as np

if os.environ.get("CROSSCAP_JETS", "").lower() == "python":
    from . import _jets_py as _impl
else:
    try:
        from . import _jetcore as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _jets_py as _impl

BACKEND = _impl.BACKEND

_FACT = [math.factorial(k) for k in range(16)]


def backend_name() -> str:
    return BACKEND


def _ascontig(a):
    return np.ascontiguousarray(a, dtype=np.float64)


def jmul(a, b):
    return _impl.jet_mul(_ascontig(a), _ascontig(b))


def jdiv(a, b):
    return _impl.jet_div(_ascontig(a), _ascontig(b))


def jsqrt(a):
    return _impl.jet_sqrt(_ascontig(a))


def jconst(value, order: int, m: int):
    out = np.zeros((order + 1, m))
    out[0] = value
    return out


def jderiv(a):
    """d/dtheta: one order is consumed."""
    k1 = a.shape[0]
    out = np.empty((k1 - 1, a.shape[1]))
    for k in range(k1 - 1):
        out[k] = (k + 1) * a[k + 1]
    return out


def match(a, b):
    """Truncate both jets to the shorter order."""
    k = min(a.shape[0], b.shape[0])
    return a[:k], b[:k]


def madd(a, b):
    a, b = match(a, b)
    return a + b


def msub(a, b):
    a, b = match(a, b)
    return a - b


def mmul(a, b):
    a, b = match(a, b)
    return jmul(a, b)


def mdiv(a, b):
    a, b = match(a, b)
    return jdiv(a, b)


def sincos_jets(thetas, order: int):
    """Jets of sin(theta), cos(theta) seeded from closed-form coefficients."""
    thetas = np.asarray(thetas, dtype=np.float64)
    m = thetas.shape[0]
    s = np.empty((order + 1, m))
    c = np.empty((order + 1, m))
    for k in range(order + 1):
        shift = k * math.pi / 2
        s[k] = np.sin(thetas + shift) / _FACT[k]
        c[k] = np.cos(thetas + shift) / _FACT[k]
    return s, c


def nth_derivative(a, n: int):
    return a[n] * _FACT[n]


# -- 3-vector helpers (vectors are lists of three jets) -----------------------

def vdot(u, v):
    return madd(madd(mmul(u[0], v[0]), mmul(u[1], v[1])), mmul(u[2], v[2]))


def vcross(u, v):
    return [
        msub(mmul(u[1], v[2]), mmul(u[2], v[1])),
        msub(mmul(u[2], v[0]), mmul(u[0], v[2])),
        msub(mmul(u[0], v[1]), mmul(u[1], v[0])),
    ]


def vdiv(u, d):
    return [mdiv(a, d) for a in u]


def vderiv(u):
    return [jderiv(a) for a in u]


def poly2_eval(coeffs, u, v):
    """Evaluate a dense bivariate polynomial (coeffs[i][j] on u^i v^j) on jets."""
    coeffs = np.asarray(coeffs, dtype=np.float64)
    nu, nv = coeffs.shape
    order = min(u.shape[0], v.shape[0]) - 1
    m = u.shape[1]
    res = None
    for i in range(nu - 1, -1, -1):
        row = None
        for j in range(nv - 1, -1, -1):
            cj = coeffs[i, j]
            if row is None:
                row = jconst(cj, order, m)
            else:
                row = mmul(row, v)
                row[0] += cj
        if res is None:
            res = row
        else:
            res = mmul(res, u)
            res = madd(res, row)
    return res
