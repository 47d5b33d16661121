"""First-term extraction from radius sweeps and closed-form comparison.

`estimate_first_term` recovers the leading power of r and its theta
coefficient from samples at a handful of radii.  The registry maps each
named first term to (a) the pipeline quantity it describes, (b) the
verified closed form, and (c) the displayed form from the source text
where that differs.  Differences are data, not silent corrections: each
entry carries a status flag and the comparison report can be run against
either variant.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np

from . import ruled, tables
from .circle_frame import CircleCurve, FrameChoice, kappa_g, kappa_n, sweep
from .normal_form import NormalFormCoeffs

# Calibrated so that remainder contamination stays well below 1e-3 relative
# for every registered quantity at moderate coefficients; double precision is
# nowhere near its noise floor here (the pipeline is clean down to r ~ 1e-6).
DEFAULT_RADII = (0.01, 0.0075, 0.005, 0.00375, 0.0025, 0.002, 0.0015)
RATIO_TOL = 0.2


class OrderUnresolvedError(RuntimeError):
    pass


class DomainError(ValueError):
    pass


@dataclass(frozen=True)
class FirstTerm:
    order: int
    thetas: np.ndarray
    coeff: np.ndarray
    resolved_fraction: float  # share of grid points whose ratios were stable


def estimate_first_term(fn: Callable, thetas, radii=DEFAULT_RADII,
                        hinted_order: int | None = None,
                        ratio_tol: float = RATIO_TOL) -> FirstTerm:
    """Estimate order and coefficient of the leading power of r.

    Order: the last three log-ratios of successive samples must agree with
    one integer within ratio_tol; the grid-wide order is the smallest
    resolved value (a vanishing coefficient at some theta shows up there
    as a higher local order).  Coefficient: least-squares fit of
    fn(r)/r^order against 1, r, ..., r^3.
    """
    radii = sorted((float(r) for r in radii), reverse=True)
    if len(radii) < 4:
        raise ValueError("need at least 4 radii")
    thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
    vals = np.stack([np.atleast_1d(fn(r, thetas)) for r in radii])  # (R, M)
    if not np.all(np.isfinite(vals)):
        raise DomainError("non-finite samples in radius sweep")
    logs = np.log(np.abs(vals) + 1e-300)
    logr = np.log(np.array(radii))
    ratios = (logs[1:] - logs[:-1]) / (logr[1:] - logr[:-1])[:, None]  # (R-1, M)
    last3 = ratios[-3:]
    cand = np.rint(np.median(last3, axis=0))
    stable = np.all(np.abs(last3 - cand[None, :]) <= ratio_tol, axis=0)
    stable &= np.max(np.abs(vals), axis=0) > 1e-300
    if not np.any(stable):
        raise OrderUnresolvedError("no grid point produced a stable order estimate")
    resolved = cand[stable].astype(int)
    order = int(resolved.min())
    if hinted_order is not None and hinted_order in resolved:
        order = int(hinted_order)
    # polynomial fit of vals / r^order in r (degree grows with the ladder)
    rcol = np.array(radii)
    deg = min(3, len(radii) - 3)
    design = np.column_stack([rcol**i for i in range(deg + 1)])
    target = vals / rcol[:, None] ** order
    coef, *_ = np.linalg.lstsq(design, target, rcond=None)
    return FirstTerm(order=order, thetas=thetas, coeff=coef[0],
                     resolved_fraction=float(np.mean(stable)))


# -- closed forms --------------------------------------------------------------

class ClosedFormId(Enum):
    KAPPA_G = "kappa_g"
    KAPPA_N = "kappa_n"
    F_K1HAT = "kappa1_hat"
    F_K2HAT = "kappa2_hat"
    F_K3HAT = "kappa3_hat"
    F_DELTA = "delta_tilde"
    F_K = "k_tilde"
    BETA_STRICTION = "beta_striction"
    K_NORMAL_LINE = "K_normal_line"
    KAPPA2_FLIPPED = "kappa2_flipped"
    DELTA_FLIPPED = "delta_flipped"
    K_FLIPPED = "k_flipped"


def _cs(thetas):
    thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
    return np.cos(thetas), np.sin(thetas)


def _acal(c, cs, sn):
    a20, a11, a02 = c.abc
    return np.sqrt(cs**2 + (a11 * cs + a02 * sn) ** 2)


def f1_bracket(c: NormalFormCoeffs, thetas):
    """sin^4 g(cot): the homogenized geodesic-curvature quartic."""
    a20, a11, a02 = c.abc
    cs, sn = _cs(thetas)
    return ((1 + a11**2) * cs**4 + a02 * a11 * cs**3 * sn
            + 3 * (1 + a11**2) * cs**2 * sn**2
            + a11 * (4 * a02 - a20) * cs * sn**3
            + a02 * (a02 - a20) * sn**4)


def f2_bracket(c: NormalFormCoeffs, thetas):
    a20, a11, a02 = c.abc
    cs, sn = _cs(thetas)
    return cs * (a02 * cs**2 + (2 * a02 + a20) * sn**2)


def fdelta_bracket(c: NormalFormCoeffs, thetas):
    a20, a11, a02 = c.abc
    cs, sn = _cs(thetas)
    return ((1 + a11**2) * (2 * a02 + a20) * cs**4
            + 2 * a02 * a11 * (2 * a02 + a20) * cs**3 * sn
            + (a02**2 * (2 * a02 + a20) - (1 + a11**2) * (a02 + 2 * a20)) * cs**2 * sn**2
            - 2 * a02 * a11 * (a02 + 2 * a20) * cs * sn**3
            - a02**2 * (a02 + 2 * a20) * sn**4)


def fk_bracket(c: NormalFormCoeffs, thetas):
    a20, a11, a02 = c.abc
    cs, sn = _cs(thetas)
    return ((4 * a02 + a20) * cs**4 + (a02 - a20) * cs**2 * sn**2
            + (a02 + 2 * a20) * sn**4)


def _flipped_bracket(table, c: NormalFormCoeffs, thetas):
    cs, sn = _cs(thetas)
    params = {"a20": c.a20, "a11": c.a11, "a02": c.a02}
    return tables.bracket_eval(table, params, cs, sn)


@dataclass(frozen=True)
class FirstTermSpec:
    id: ClosedFormId
    order: int
    coeff: Callable  # (coeffs, thetas, beta) -> verified first-term coefficient
    pipeline: Callable  # (coeffs, beta) -> fn(r, thetas)
    status: str  # "confirmed" | "constant-corrected" | "corrected"
    displayed_order: int | None = None  # when the displayed power differs
    displayed_coeff: Callable | None = None  # when the displayed form differs
    note: str = ""
    radii_scale: float = 1.0  # quantities with slow expansions shrink the ladder


def _pl_kappa_g(c, beta):
    return lambda r, th: kappa_g(CircleCurve(r, c), th)


def _pl_kappa_n(c, beta):
    return lambda r, th: kappa_n(CircleCurve(r, c), th)


def _sweep_value(c, name, choice):
    def fn(r, th):
        return sweep(CircleCurve(r, c), th, choice).values(name)
    return fn


def _pl_k1hat_tilde(c, beta):
    def fn(r, th):
        sw = sweep(CircleCurve(r, c), th, FrameChoice.NORMAL_TILDE)
        return sw.values("l") ** 2 * sw.values("k1")
    return fn


def _pl_kappa2_flipped(c, beta):
    def fn(r, th):
        sw = sweep(CircleCurve(r, c), th, FrameChoice.FLIPPED_BINORMAL)
        return sw.values("l") ** 2 * sw.values("k2")
    return fn


def _pl_beta(c, beta):
    return lambda r, th: ruled.beta_striction(CircleCurve(r, c), th)


def _pl_K_normal_line(c, beta):
    if beta is None:
        raise DomainError("K_NORMAL_LINE needs a ruling offset beta")
    return lambda r, th: ruled.normal_line_K(CircleCurve(r, c), th, beta)


def _kn_coeff(c: NormalFormCoeffs, thetas):
    a20, a11, a02 = c.abc
    cs, sn = _cs(thetas)
    a = _acal(c, cs, sn)
    return cs * ((3 * a02 + a20) * sn**2 + (a02 - a20) * cs**2) / (a * sn**2)


REGISTRY: dict[ClosedFormId, FirstTermSpec] = {}


def _register(spec: FirstTermSpec):
    REGISTRY[spec.id] = spec


_register(FirstTermSpec(
    id=ClosedFormId.KAPPA_G, order=0,
    coeff=lambda c, th, beta: f1_bracket(c, th)
    / (np.abs(np.sin(np.atleast_1d(th))) ** 3 * _acal(c, *_cs(th))),
    pipeline=_pl_kappa_g, status="confirmed", radii_scale=0.5,
    note="|sin| g(cot)/A, homogenized as F1/(|sin|^3 A)"))

_register(FirstTermSpec(
    id=ClosedFormId.KAPPA_N, order=0,
    coeff=lambda c, th, beta: _kn_coeff(c, th),
    pipeline=_pl_kappa_n, status="confirmed", radii_scale=0.5,
    note="curvature vector projected on the blow-up normal at r = 0"))

_register(FirstTermSpec(
    id=ClosedFormId.F_K1HAT, order=3,
    coeff=lambda c, th, beta: f1_bracket(c, th) / _acal(c, *_cs(th)),
    pipeline=_pl_k1hat_tilde, status="confirmed"))

_register(FirstTermSpec(
    id=ClosedFormId.F_K2HAT, order=2,
    coeff=lambda c, th, beta: f2_bracket(c, th) / _acal(c, *_cs(th)),
    pipeline=lambda c, beta: _sweep_value(c, "k2h", FrameChoice.NORMAL_TILDE),
    status="confirmed"))

_register(FirstTermSpec(
    id=ClosedFormId.F_K3HAT, order=1,
    coeff=lambda c, th, beta: -float(c.a02) * np.sin(np.atleast_1d(th))
    / _acal(c, *_cs(th)) ** 2,
    pipeline=lambda c, beta: _sweep_value(c, "k3h", FrameChoice.NORMAL_TILDE),
    status="confirmed"))

_register(FirstTermSpec(
    id=ClosedFormId.F_DELTA, order=3,
    coeff=lambda c, th, beta: float(c.a02) * np.sin(np.atleast_1d(th)) ** 2
    * fdelta_bracket(c, th) / _acal(c, *_cs(th)) ** 5,
    pipeline=lambda c, beta: _sweep_value(c, "delta", FrameChoice.NORMAL_TILDE),
    status="constant-corrected",
    displayed_order=3,
    displayed_coeff=lambda c, th, beta: 4 * float(c.a02) * np.sin(np.atleast_1d(th)) ** 2
    * fdelta_bracket(c, th) / _acal(c, *_cs(th)) ** 5,
    note="displayed prefactor 4 a02 sin^2/A^5; verified constant is a02 (factor 4 slip)"))

_register(FirstTermSpec(
    id=ClosedFormId.F_K, order=6,
    coeff=lambda c, th, beta: -3 * float(c.a02) * (float(c.a02) + float(c.a20))
    * np.sin(np.atleast_1d(th)) ** 4 * fk_bracket(c, th) / _acal(c, *_cs(th)) ** 4,
    pipeline=lambda c, beta: _sweep_value(c, "k", FrameChoice.NORMAL_TILDE),
    status="constant-corrected",
    displayed_order=6,
    displayed_coeff=lambda c, th, beta: -3 * float(c.a02) * (float(c.a02) - float(c.a20))
    * np.sin(np.atleast_1d(th)) ** 4 * fk_bracket(c, th) / _acal(c, *_cs(th)) ** 4,
    note="displayed parameter factor (a02 - a20); verified factor is (a02 + a20)"))

_register(FirstTermSpec(
    id=ClosedFormId.BETA_STRICTION, order=2,
    coeff=lambda c, th, beta: f2_bracket(c, th) * _acal(c, *_cs(th)) ** 3
    / float(c.a02) ** 2,
    pipeline=_pl_beta, status="constant-corrected",
    displayed_order=2,
    displayed_coeff=lambda c, th, beta: 2 * f2_bracket(c, th) * _acal(c, *_cs(th)) ** 3
    / float(c.a02) ** 2,
    note="displayed prefactor 2; verified constant is 1 (factor 2 slip)"))

_register(FirstTermSpec(
    id=ClosedFormId.K_NORMAL_LINE, order=2,
    coeff=lambda c, th, beta: -np.sin(np.atleast_1d(th)) ** 2
    * _acal(c, *_cs(th)) ** 4 / (float(c.a02) ** 2 * float(beta) ** 4),
    pipeline=_pl_K_normal_line, status="corrected",
    radii_scale=0.25,
    displayed_order=0,
    displayed_coeff=lambda c, th, beta: -np.sin(np.atleast_1d(th)) ** 2 / float(beta) ** 2
    + 0 * np.atleast_1d(th),
    note="displayed -sin^2/beta^2 + O(r); verified K = -sin^2 A^4/(a02^2 beta^4) r^2"))

_register(FirstTermSpec(
    id=ClosedFormId.KAPPA2_FLIPPED, order=3,
    coeff=lambda c, th, beta: f1_bracket(c, th) / _acal(c, *_cs(th)),
    pipeline=_pl_kappa2_flipped, status="confirmed",
    note="l^2 kappa2 = sin^4 g(cot)/A r^3; zero set is the zero set of g"))

_register(FirstTermSpec(
    id=ClosedFormId.DELTA_FLIPPED, order=3,
    coeff=lambda c, th, beta: _flipped_bracket(tables.DELTA_FLIPPED_VERIFIED, c, th)
    / (np.sin(np.atleast_1d(th)) * _acal(c, *_cs(th)) ** 3),
    pipeline=lambda c, beta: _sweep_value(c, "delta", FrameChoice.FLIPPED_BINORMAL),
    status="corrected",
    displayed_order=2,
    displayed_coeff=lambda c, th, beta: float(c.a02)
    * _flipped_bracket(tables.DELTA_FLIPPED_DISPLAYED, c, th)
    / (np.sin(np.atleast_1d(th)) ** 2 * _acal(c, *_cs(th)) ** 5),
    note="displayed degree-7 bracket at r^2; verified: degree-5 bracket/(sin A^3) at r^3"))

_register(FirstTermSpec(
    id=ClosedFormId.K_FLIPPED, order=6,
    coeff=lambda c, th, beta: _flipped_bracket(tables.K_FLIPPED_VERIFIED, c, th)
    / (np.sin(np.atleast_1d(th)) * _acal(c, *_cs(th)) ** 4),
    pipeline=lambda c, beta: _sweep_value(c, "k", FrameChoice.FLIPPED_BINORMAL),
    status="corrected",
    displayed_order=4,
    displayed_coeff=lambda c, th, beta: -64 * float(c.a02)
    * _flipped_bracket(tables.K_FLIPPED_DISPLAYED, c, th)
    / (np.sin(np.atleast_1d(th)) ** 4 * _acal(c, *_cs(th)) ** 4),
    note="displayed 15-entry degree-14 table at r^4; verified: degree-9 bracket/(sin A^4) at r^6"))


def closed_form_eval(id: ClosedFormId, thetas, c: NormalFormCoeffs, beta=None):
    """Verified first-term coefficient (prefactor included)."""
    spec = REGISTRY[id]
    thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
    if np.any(np.sin(thetas) <= 0):
        raise DomainError("closed forms are evaluated on theta in (0, pi)")
    if id is ClosedFormId.K_NORMAL_LINE and beta is None:
        raise DomainError("K_NORMAL_LINE needs beta")
    return np.asarray(spec.coeff(c, thetas, beta), dtype=float)


def displayed_form_eval(id: ClosedFormId, thetas, c: NormalFormCoeffs, beta=None):
    """Displayed first-term coefficient: equals the verified one when confirmed."""
    spec = REGISTRY[id]
    thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
    if spec.displayed_coeff is None:
        return closed_form_eval(id, thetas, c, beta)
    return np.asarray(spec.displayed_coeff(c, thetas, beta), dtype=float)


def displayed_order(id: ClosedFormId) -> int:
    spec = REGISTRY[id]
    return spec.order if spec.displayed_order is None else spec.displayed_order


@dataclass(frozen=True)
class CompareRow:
    theta: float
    pipeline_value: float
    closed_form_value: float
    rel_err: float


@dataclass(frozen=True)
class CompareReport:
    id: ClosedFormId
    order_measured: int
    order_expected: int
    rows: tuple
    max_rel_err: float
    tol: float
    variant: str

    @property
    def ok(self) -> bool:
        return self.order_measured == self.order_expected and self.max_rel_err < self.tol

    @property
    def failing(self):
        return [r for r in self.rows if r.rel_err >= self.tol]


def compare(id: ClosedFormId, c: NormalFormCoeffs, thetas, radii=DEFAULT_RADII,
            tol: float = 1e-3, beta: float | None = None,
            variant: str = "verified") -> CompareReport:
    """Extrapolated pipeline first term vs the closed form on the grid.

    Relative errors are floored at 1e-3 of the grid-wide scale so isolated
    zeros of the closed form do not manufacture infinite ratios.
    """
    spec = REGISTRY[id]
    fn = spec.pipeline(c, beta)
    expected_order = spec.order if variant == "verified" else displayed_order(id)
    radii = tuple(spec.radii_scale * r for r in radii)
    est = estimate_first_term(fn, thetas, radii, hinted_order=spec.order)
    want = (closed_form_eval(id, thetas, c, beta) if variant == "verified"
            else displayed_form_eval(id, thetas, c, beta))
    scale = np.max(np.abs(want)) + 1e-300
    rel = np.abs(est.coeff - want) / np.maximum(np.abs(want), 1e-3 * scale)
    rows = tuple(CompareRow(float(t), float(p), float(w), float(e))
                 for t, p, w, e in zip(est.thetas, est.coeff, want, rel))
    return CompareReport(id=id, order_measured=est.order,
                         order_expected=expected_order, rows=rows,
                         max_rel_err=float(np.max(rel)), tol=tol, variant=variant)
