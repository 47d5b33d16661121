"""Curvature functions along the circle gamma(theta) = (r cos, r sin).

The image curve, the adapted orthonormal frames (e, b, n) for both normal
choices, and the scalar functions along it: speed l, frame curvatures
kappa_1..3 and their l-weighted hats, the developable invariants delta and
k, geodesic and normal curvature.  All theta-derivatives come from
truncated Taylor jets (forward-mode), never finite differences.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

import numpy as np

from . import jets
from .jets import jderiv, madd, mmul, msub, vcross, vdiv, vdot
from .normal_form import BivarPoly3, NormalFormCoeffs, build_f0, extended_normal
from .surface_geom import christoffel

JET_ORDER = 6
THETA_GUARD = 1e-3  # |sin theta| below this: kappa_g / kappa_n undefined


class NearAxisError(ValueError):
    pass


class DegenerateSpeedError(ValueError):
    pass


class FrameChoice(Enum):
    """n = surface normal, or n = -e x (surface normal)."""

    NORMAL_TILDE = "tilde"
    FLIPPED_BINORMAL = "flipped"


@dataclass(frozen=True)
class CircleCurve:
    r: float
    coeffs: NormalFormCoeffs

    def __post_init__(self):
        if not self.r > 0:
            raise ValueError(f"radius must be positive, got {self.r}")

    @cached_property
    def surface(self) -> BivarPoly3:
        return build_f0(self.coeffs)


@dataclass(frozen=True)
class FrameState:
    theta: float
    e: np.ndarray
    b: np.ndarray
    n: np.ndarray


@dataclass(frozen=True)
class CurvatureData:
    l: float
    kappa1: float
    kappa2: float
    kappa3: float
    kappa2_hat: float
    kappa3_hat: float


@dataclass
class FrameSweep:
    """Jet bundle along a theta grid; value arrays via the v* properties."""

    thetas: np.ndarray
    r: float
    choice: FrameChoice
    gamma: list = field(repr=False)
    e: list = field(repr=False)
    b: list = field(repr=False)
    n: list = field(repr=False)
    ntil: list = field(repr=False)
    l: np.ndarray = field(repr=False)
    k1: np.ndarray = field(repr=False)
    k2: np.ndarray = field(repr=False)
    k3: np.ndarray = field(repr=False)
    k2h: np.ndarray = field(repr=False)
    k3h: np.ndarray = field(repr=False)
    delta: np.ndarray = field(repr=False)
    k: np.ndarray = field(repr=False)

    def values(self, name: str) -> np.ndarray:
        a = getattr(self, name)
        if isinstance(a, list):
            return np.stack([comp[0] for comp in a])
        return a[0]


def _curve_jets(cc: CircleCurve, thetas, order: int):
    thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
    sin_j, cos_j = jets.sincos_jets(thetas, order)
    u = cc.r * cos_j
    v = cc.r * sin_j
    f = cc.surface
    fu_map = f.partial("u")
    fv_map = f.partial("v")
    gamma = [p.eval_jet(u, v) for p in f.components()]
    fu = [p.eval_jet(u, v) for p in fu_map.components()]
    fv = [p.eval_jet(u, v) for p in fv_map.components()]
    return thetas, gamma, fu, fv


def sweep(cc: CircleCurve, thetas, choice: FrameChoice = FrameChoice.NORMAL_TILDE,
          order: int = JET_ORDER) -> FrameSweep:
    """One forward pass: frames and every scalar invariant on the grid."""
    thetas, gamma, fu, fv = _curve_jets(cc, thetas, order)
    gp = [jderiv(g) for g in gamma]
    l = jets.jsqrt(vdot(gp, gp))
    if np.any(l[0] < 1e-15):
        raise DegenerateSpeedError("image curve speed below 1e-15")
    e = vdiv(gp, l)
    nraw = vcross(fu, fv)
    ntil = vdiv(nraw, jets.jsqrt(vdot(nraw, nraw)))
    if choice is FrameChoice.FLIPPED_BINORMAL:
        n = [-w for w in vcross(e, ntil)]
    else:
        n = ntil
    b = [-w for w in vcross(e, n)]
    ep = [jderiv(w) for w in e]
    bp = [jderiv(w) for w in b]
    k1 = vdot(ep, b)
    k2 = vdot(ep, n)
    k3 = vdot(bp, n)
    k2h = mmul(l, k2)
    k3h = mmul(l, k3)
    k2hp = jderiv(k2h)
    k3hp = jderiv(k3h)
    delta = msub(madd(mmul(k1, madd(mmul(k2h, k2h), mmul(k3h, k3h))),
                      mmul(k2h, k3hp)),
                 mmul(k2hp, k3h))
    bracket = msub(mmul(l, mmul(k1, k3h)),
                   madd(2.0 * jets.mmul(l, k2hp), mmul(jderiv(l), k2h)))
    kfun = madd(mmul(delta, bracket), mmul(mmul(l, k2h), jderiv(delta)))
    return FrameSweep(thetas=thetas, r=cc.r, choice=choice, gamma=gamma,
                      e=e, b=b, n=n, ntil=ntil, l=l,
                      k1=k1, k2=k2, k3=k3, k2h=k2h, k3h=k3h,
                      delta=delta, k=kfun)


def image_curve(cc: CircleCurve, theta: float):
    """gamma_hat(theta) with first and second theta-derivatives (exact jets)."""
    _, gamma, _, _ = _curve_jets(cc, [theta], JET_ORDER)
    pt = np.array([g[0, 0] for g in gamma])
    d1 = np.array([g[1, 0] for g in gamma])
    d2 = np.array([2 * g[2, 0] for g in gamma])
    return pt, d1, d2


def frame(cc: CircleCurve, theta: float, choice: FrameChoice) -> FrameState:
    sw = sweep(cc, [theta], choice)
    return FrameState(theta=theta,
                      e=sw.values("e")[:, 0],
                      b=sw.values("b")[:, 0],
                      n=sw.values("n")[:, 0])


def curvature_data(cc: CircleCurve, theta: float, choice: FrameChoice) -> CurvatureData:
    sw = sweep(cc, [theta], choice)
    return CurvatureData(
        l=float(sw.values("l")[0]),
        kappa1=float(sw.values("k1")[0]),
        kappa2=float(sw.values("k2")[0]),
        kappa3=float(sw.values("k3")[0]),
        kappa2_hat=float(sw.values("k2h")[0]),
        kappa3_hat=float(sw.values("k3h")[0]),
    )


def _guard(thetas, guard: float):
    thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
    bad = np.abs(np.sin(thetas)) < guard
    if np.any(bad):
        raise NearAxisError(
            f"|sin theta| < {guard} at theta={thetas[bad][:3]}: undefined near the axis")
    return thetas


def kappa_g(cc: CircleCurve, thetas, guard: float = THETA_GUARD):
    """Geodesic curvature, extrinsic route: det(n, gamma', gamma'')/l^3."""
    thetas = _guard(thetas, guard)
    _, gamma, fu, fv = _curve_jets(cc, thetas, 3)
    gp = [jderiv(g) for g in gamma]
    gpp = [jderiv(g) for g in gp]
    nraw = vcross(fu, fv)
    ntil = vdiv(nraw, jets.jsqrt(vdot(nraw, nraw)))
    det = vdot(ntil, vcross(gp, gpp))
    l = jets.jsqrt(vdot(gp, gp))
    out = det[0] / l[0] ** 3
    return out if out.shape != (1,) else float(out[0])


def kappa_g_intrinsic(cc: CircleCurve, thetas, guard: float = THETA_GUARD):
    """Geodesic curvature via Christoffel symbols of the induced metric."""
    thetas = _guard(thetas, guard)
    r = cc.r
    f = cc.surface
    fu_map, fv_map = f.partial("u"), f.partial("v")
    out = np.empty_like(thetas)
    for i, th in enumerate(thetas):
        u, v = r * np.cos(th), r * np.sin(th)
        up, vp = -r * np.sin(th), r * np.cos(th)
        upp, vpp = -u, -v
        ga = christoffel(f, u, v)
        au = upp + ga.uuu * up * up + 2 * ga.uuv * up * vp + ga.uvv * vp * vp
        av = vpp + ga.vuu * up * up + 2 * ga.vuv * up * vp + ga.vvv * vp * vp
        fu = fu_map.eval(u, v)
        fv = fv_map.eval(u, v)
        ht = up * fu + vp * fv
        l2 = ht @ ht
        kg_vec = (au * fu + av * fv) / l2
        n = np.cross(fu, fv)
        n /= np.linalg.norm(n)
        out[i] = np.linalg.det(np.column_stack([n, ht / np.sqrt(l2), kg_vec]))
    return out if out.shape != (1,) else float(out[0])


def kappa_n(cc: CircleCurve, thetas, guard: float = THETA_GUARD):
    """Normal curvature with respect to the blow-up normal at r = 0.

    The curvature vector of the image circle is projected onto the
    direction-dependent unit normal extended to the singular point, which
    is the quantity whose first term has the displayed closed form.  See
    kappa_n_surface for the projection onto the normal at the point itself.
    """
    thetas = _guard(thetas, guard)
    _, gamma, _, _ = _curve_jets(cc, thetas, 3)
    gp = [jderiv(g) for g in gamma]
    gpp = [jderiv(g) for g in gp]
    n0 = extended_normal(thetas, cc.coeffs)
    l2 = vdot(gp, gp)[0]
    num = sum(gpp[i][0] * n0[i] for i in range(3))
    out = num / l2
    return out if out.shape != (1,) else float(out[0])


def kappa_n_surface(cc: CircleCurve, thetas, guard: float = THETA_GUARD):
    """Second-fundamental-form normal curvature (normal taken at the point)."""
    thetas = _guard(thetas, guard)
    _, gamma, fu, fv = _curve_jets(cc, thetas, 3)
    gp = [jderiv(g) for g in gamma]
    gpp = [jderiv(g) for g in gp]
    nraw = vcross(fu, fv)
    ntil = vdiv(nraw, jets.jsqrt(vdot(nraw, nraw)))
    out = vdot(gpp, [w[:2] for w in ntil])[0] / vdot(gp, gp)[0]
    return out if out.shape != (1,) else float(out[0])


def frame_matrix_residual(sw: FrameSweep) -> float:
    """Max deviation of (e,b,n)' = M (e,b,n) from antisymmetry."""
    worst = 0.0
    vecs = {"e": sw.e, "b": sw.b, "n": sw.n}
    prims = {k: [jderiv(c) for c in v] for k, v in vecs.items()}
    names = ["e", "b", "n"]
    m = {}
    for a in names:
        for bb in names:
            m[(a, bb)] = vdot(prims[a], vecs[bb])[0]
    for i, a in enumerate(names):
        worst = max(worst, float(np.max(np.abs(m[(a, a)]))))
        for bb in names[i + 1:]:
            worst = max(worst, float(np.max(np.abs(m[(a, bb)] + m[(bb, a)]))))
    return worst
