"""Ruled surfaces: striction, classification, and the two constructions
along the blown-up circle (normal-line surface and normal developable)."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np

from . import jets
from .jets import jderiv, madd, mdiv, mmul, msub, vcross, vdiv, vdot
from .circle_frame import CircleCurve, FrameChoice, FrameSweep, sweep

CYL_TOL = 1e-12


class CylindricalError(ValueError):
    pass


class UndefinedDirectorError(ValueError):
    pass


class OnCurveError(ValueError):
    pass


class RuledClass(Enum):
    CYLINDER = "cylinder"
    CONE = "cone"
    TANGENT_DEVELOPABLE = "tangent_developable"
    NONCYL_GENERIC = "noncylindrical_generic"


@dataclass(frozen=True)
class RuledSurface:
    """base/director: callables (thetas, order) -> list of three jet arrays."""

    base: Callable
    director: Callable

    def point(self, theta: float, beta: float) -> np.ndarray:
        g = self.base(np.atleast_1d(theta), 1)
        d = self.director(np.atleast_1d(theta), 1)
        return np.array([g[i][0, 0] + beta * d[i][0, 0] for i in range(3)])


def striction_curve(rs: RuledSurface, thetas) -> np.ndarray:
    """sigma = base - (base'.dir')/(dir'.dir') dir, shape (3, M)."""
    thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
    g = rs.base(thetas, 2)
    d = rs.director(thetas, 2)
    gp = [jderiv(x) for x in g]
    dp = [jderiv(x) for x in d]
    dd = vdot(dp, dp)[0]
    if np.any(dd < CYL_TOL**2):
        raise CylindricalError("director' vanishes: striction undefined")
    coef = vdot(gp, dp)[0] / dd
    return np.stack([g[i][0] - coef * d[i][0] for i in range(3)])


def striction_offset(rs: RuledSurface, thetas) -> np.ndarray:
    """The beta value placing the striction point on each ruling."""
    thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
    g = rs.base(thetas, 2)
    d = rs.director(thetas, 2)
    gp = [jderiv(x) for x in g]
    dp = [jderiv(x) for x in d]
    dd = vdot(dp, dp)[0]
    if np.any(dd < CYL_TOL**2):
        raise CylindricalError("director' vanishes: striction undefined")
    return -vdot(gp, dp)[0] / dd


def classify(rs: RuledSurface, thetas, tol: float = 1e-8) -> RuledClass:
    """Cylinder / cone / tangent developable / generic, tested on the grid."""
    thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
    g = rs.base(thetas, 3)
    d = rs.director(thetas, 3)
    gp = [jderiv(x) for x in g]
    dp = [jderiv(x) for x in d]
    scale = max(1.0, float(np.max(np.abs(np.stack([x[0] for x in g])))))
    if float(np.max(np.abs(np.stack([x[0] for x in dp])))) < tol * scale:
        return RuledClass.CYLINDER
    # striction derivative via jets
    dd = vdot(dp, dp)
    coef = mdiv(vdot(gp, dp), dd)
    sigma = [msub(g[i], mmul(coef, d[i])) for i in range(3)]
    sigp = np.stack([jderiv(x)[0] for x in sigma])
    if float(np.max(np.abs(sigp))) < tol * scale:
        return RuledClass.CONE
    # director parallel to base tangent?
    cr = vcross(gp, d)
    if float(np.max(np.abs(np.stack([x[0] for x in cr])))) < tol * scale:
        return RuledClass.TANGENT_DEVELOPABLE
    return RuledClass.NONCYL_GENERIC


def gaussian_curvature(rs: RuledSurface, thetas, beta: float) -> np.ndarray:
    """K of base + beta*director: -<dir', w>^2/|w|^4, w = h_theta x dir."""
    thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
    g = rs.base(thetas, 2)
    d = rs.director(thetas, 2)
    gp = [jderiv(x) for x in g]
    dp = [jderiv(x) for x in d]
    ht = [madd(gp[i], beta * dp[i]) for i in range(3)]
    w = vcross(ht, d)
    w2 = vdot(w, w)[0]
    m = vdot(dp, w)[0]
    return -(m * m) / (w2 * w2)


# -- constructions along the blown-up circle ---------------------------------

def _gamma_fn(cc: CircleCurve):
    def base(thetas, order):
        from .circle_frame import _curve_jets
        _, gamma, _, _ = _curve_jets(cc, thetas, order)
        return gamma
    return base


def _ntil_fn(cc: CircleCurve):
    def director(thetas, order):
        from .circle_frame import _curve_jets
        _, _, fu, fv = _curve_jets(cc, thetas, order + 1)
        nraw = vcross(fu, fv)
        n = vdiv(nraw, jets.jsqrt(vdot(nraw, nraw)))
        return [x[: order + 1] for x in n]
    return director


def normal_line_surface(cc: CircleCurve) -> RuledSurface:
    """gamma_hat(theta) + beta * ntil(theta)."""
    return RuledSurface(base=_gamma_fn(cc), director=_ntil_fn(cc))


def beta_striction(cc: CircleCurve, thetas) -> np.ndarray:
    return striction_offset(normal_line_surface(cc), thetas)


def normal_line_K(cc: CircleCurve, thetas, beta: float) -> np.ndarray:
    if beta == 0.0:
        raise OnCurveError("K undefined on the base curve (beta = 0)")
    return gaussian_curvature(normal_line_surface(cc), thetas, beta)


@dataclass
class DevelopableData:
    """Normal developable h = gamma_hat + beta D for a frame choice."""

    cc: CircleCurve
    choice: FrameChoice
    surface: RuledSurface
    frame_sweep: FrameSweep

    def delta_fn(self, thetas) -> np.ndarray:
        return sweep(self.cc, thetas, self.choice).values("delta")

    def k_fn(self, thetas) -> np.ndarray:
        return sweep(self.cc, thetas, self.choice).values("k")

    def director(self, thetas) -> np.ndarray:
        d = self.surface.director(np.atleast_1d(thetas), 1)
        return np.stack([x[0] for x in d])


def _director_D(cc: CircleCurve, choice: FrameChoice, denom_tol: float = 1e-30):
    def director(thetas, order):
        sw = sweep(cc, thetas, choice, order=order + 2)
        q = madd(mmul(sw.k2h, sw.k2h), mmul(sw.k3h, sw.k3h))
        if np.any(q[0] < denom_tol):
            raise UndefinedDirectorError("(kappa2, kappa3) = (0,0) on the grid")
        root = jets.jsqrt(q)
        d = [mdiv(msub(mmul(sw.k3h, e_i), mmul(sw.k2h, b_i)), root)
             for e_i, b_i in zip(sw.e, sw.b)]
        return [x[: order + 1] for x in d]
    return director


def normal_developable(cc: CircleCurve, choice: FrameChoice,
                       thetas_check=None) -> DevelopableData:
    """The developable swept by D = (k3^ e - k2^ b)/sqrt(k2^2 + k3^2)."""
    sw = sweep(cc, np.array([1.0]) if thetas_check is None else thetas_check, choice)
    rs = RuledSurface(base=_gamma_fn(cc), director=_director_D(cc, choice))
    return DevelopableData(cc=cc, choice=choice, surface=rs, frame_sweep=sw)


def developable_identities(cc: CircleCurve, thetas, choice: FrameChoice) -> dict:
    """Residuals of the closed-form striction identities of the developable.

    Returns max-abs residuals over the grid for:
      striction   |sigma_closed - sigma_generic|
      sigma_prime |sigma' - (k/delta^2)(k3^ e - k2^ b)|
      angle       angle between sigma' and (k3^ e - k2^ b)  [rad]
      dprime      | |D'| - |delta|/(k2^2 + k3^2) |  (relative)
    Grid points where delta ~ 0 are excluded from the sigma checks.
    """
    thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
    sw = sweep(cc, thetas, choice)
    l, k2h, k3h, delta = sw.l, sw.k2h, sw.k3h, sw.delta
    w = [msub(mmul(k3h, e_i), mmul(k2h, b_i)) for e_i, b_i in zip(sw.e, sw.b)]
    dmask = np.abs(delta[0]) > 1e-8 * np.max(np.abs(delta[0]))
    coef = mdiv(mmul(l, k2h), delta)
    sigma = [msub(g_i, mmul(coef, w_i)) for g_i, w_i in zip(sw.gamma, w)]
    sigp = np.stack([jderiv(s_i)[0] for s_i in sigma])
    kv = sw.values("k")
    pred = np.stack([(kv / delta[0] ** 2) * w_i[0] for w_i in w])
    scale = np.maximum(np.abs(sigp).max(axis=0), 1e-300)
    sigma_prime_res = float(np.max(np.abs(sigp - pred)[:, dmask]))
    # angle between sigma' and w
    wv = np.stack([w_i[0] for w_i in w])
    dots = np.sum(sigp * wv, axis=0)
    nrm = np.linalg.norm(sigp, axis=0) * np.linalg.norm(wv, axis=0)
    cosang = np.clip(np.abs(dots) / np.maximum(nrm, 1e-300), 0, 1)
    angle = float(np.max(np.arcsin(np.sqrt(np.maximum(0, 1 - cosang[dmask] ** 2)))))
    # generic striction vs closed form
    rs = RuledSurface(base=_gamma_fn(cc), director=_director_D(cc, choice))
    sig_gen = striction_curve(rs, thetas)
    sig_closed = np.stack([s_i[0] for s_i in sigma])
    striction_res = float(np.max(np.abs(sig_gen - sig_closed)[:, dmask]))
    # |D'| identity
    q = madd(mmul(k2h, k2h), mmul(k3h, k3h))
    droot = jets.jsqrt(q)
    D = [mdiv(w_i, droot) for w_i in w]
    dp = np.stack([jderiv(d_i)[0] for d_i in D])
    lhs = np.linalg.norm(dp, axis=0)
    rhs = np.abs(delta[0]) / q[0]
    dprime_rel = float(np.max(np.abs(lhs - rhs) / np.maximum(rhs, 1e-300)))
    return {"striction": striction_res, "sigma_prime": sigma_prime_res,
            "angle": angle, "dprime": dprime_rel}


def developable_striction_closed(cc: CircleCurve, thetas, choice: FrameChoice,
                                 delta_tol: float = 1e-8) -> np.ndarray:
    """sigma = gamma_hat - (l k2^/delta)(k3^ e - k2^ b); needs delta != 0."""
    sw = sweep(cc, thetas, choice)
    delta = sw.values("delta")
    if np.any(np.abs(delta) < delta_tol * np.max(np.abs(delta))) or np.any(delta == 0):
        raise CylindricalError("delta vanishes on the grid: striction undefined")
    l, k2h, k3h = sw.values("l"), sw.values("k2h"), sw.values("k3h")
    coef = l * k2h / delta
    e, b, gam = sw.values("e"), sw.values("b"), sw.values("gamma")
    return gam - coef * (k3h * e - k2h * b)
