"""Classical surface machinery at regular points.

Fundamental forms, Christoffel symbols of the induced metric, Gaussian
curvature, and the runtime check tying the unit normal at r > 0 to its
blow-up extension at r = 0.  All derivatives of the surface come from the
exact polynomial representation; only the final evaluations are floats.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .normal_form import BivarPoly3, NormalFormCoeffs, extended_normal

SINGULAR_TOL = 1e-30  # absolute floor for EG - F^2


class SingularPointError(ValueError):
    pass


@dataclass(frozen=True)
class FundForms:
    E: float
    F: float
    G: float
    L: float
    M: float
    N: float

    @property
    def w2(self) -> float:
        return self.E * self.G - self.F**2


@dataclass(frozen=True)
class Christoffel:
    """Gamma^u_uu, Gamma^u_uv, Gamma^u_vv, Gamma^v_uu, Gamma^v_uv, Gamma^v_vv."""

    uuu: float
    uuv: float
    uvv: float
    vuu: float
    vuv: float
    vvv: float


def unit_normal(f: BivarPoly3, u: float, v: float):
    fu = f.partial("u").eval(u, v)
    fv = f.partial("v").eval(u, v)
    n = np.cross(fu, fv)
    nn = np.linalg.norm(n)
    if nn**2 < SINGULAR_TOL:
        raise SingularPointError(f"|fu x fv|^2 < {SINGULAR_TOL} at ({u}, {v})")
    return n / nn


def fundamental_forms(f: BivarPoly3, u: float, v: float) -> FundForms:
    pu, pv = f.partial("u"), f.partial("v")
    fu, fv = pu.eval(u, v), pv.eval(u, v)
    E = fu @ fu
    F = fu @ fv
    G = fv @ fv
    if E * G - F**2 < SINGULAR_TOL:
        raise SingularPointError(f"EG - F^2 < {SINGULAR_TOL} at ({u}, {v})")
    n = np.cross(fu, fv)
    n /= np.linalg.norm(n)
    fuu = pu.partial("u").eval(u, v)
    fuv = pu.partial("v").eval(u, v)
    fvv = pv.partial("v").eval(u, v)
    return FundForms(E, F, G, fuu @ n, fuv @ n, fvv @ n)


def christoffel(f: BivarPoly3, u: float, v: float) -> Christoffel:
    pu, pv = f.partial("u"), f.partial("v")
    fu, fv = pu.eval(u, v), pv.eval(u, v)
    fuu = pu.partial("u").eval(u, v)
    fuv = pu.partial("v").eval(u, v)
    fvv = pv.partial("v").eval(u, v)
    E = fu @ fu
    F = fu @ fv
    G = fv @ fv
    w2 = E * G - F**2
    if w2 < SINGULAR_TOL:
        raise SingularPointError(f"EG - F^2 < {SINGULAR_TOL} at ({u}, {v})")
    # metric derivatives from second partials
    E_u = 2 * fuu @ fu
    E_v = 2 * fuv @ fu
    G_u = 2 * fuv @ fv
    G_v = 2 * fvv @ fv
    F_u = fuu @ fv + fu @ fuv
    F_v = fuv @ fv + fu @ fvv
    inv2 = 1.0 / (2 * w2)
    return Christoffel(
        uuu=(G * E_u - 2 * F * F_u + F * E_v) * inv2,
        uuv=(G * E_v - F * G_u) * inv2,
        uvv=(2 * G * F_v - G * G_u - F * G_v) * inv2,
        vuu=(2 * E * F_u - E * E_v - F * E_u) * inv2,
        vuv=(E * G_u - F * E_v) * inv2,
        vvv=(E * G_v - 2 * F * F_v + F * G_u) * inv2,
    )


def gaussian_curvature(f: BivarPoly3, u: float, v: float) -> float:
    ff = fundamental_forms(f, u, v)
    return (ff.L * ff.N - ff.M**2) / ff.w2


def normal_sign_flip(f: BivarPoly3, c: NormalFormCoeffs, r: float = 1e-4) -> int:
    """+1 if fu x fv converges to the blow-up normal, -1 if to its negative.

    For the normal form the answer is +1; the runtime check guards against
    an orientation regression when coefficients are transformed.
    """
    best = 0.0
    sign = 1
    for theta in (0.3, 1.2, 2.1, 2.9):
        n = unit_normal(f, r * np.cos(theta), r * np.sin(theta))
        n0 = extended_normal(theta, c)
        dot = float(n @ n0)
        if abs(dot) > best:
            best = abs(dot)
            sign = 1 if dot > 0 else -1
    return sign
