"""Executable root-count and root-location statements.

Everything is driven by exact Sturm counts on quartics (or the flipped
brackets' cot-polynomials); closed-form case analyses are cross-checked
against those counts in the test suite.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import tables
from .normal_form import NormalFormCoeffs
from .polycore import (UniPoly, squarefree_multiplicities, sturm_distinct_real_roots)


class HypothesisError(ValueError):
    """Inputs outside a theorem's hypotheses; use the Sturm path instead."""


@dataclass(frozen=True)
class RootReport:
    distinct_real_count: int
    roots: tuple = ()
    multiplicities: tuple = ()
    theta_values: tuple = ()

    @staticmethod
    def from_roots(roots, mults) -> "RootReport":
        pairs = sorted(zip(roots, mults))
        roots = tuple(r for r, _ in pairs)
        mults = tuple(m for _, m in pairs)
        return RootReport(
            distinct_real_count=len(roots), roots=roots, multiplicities=mults,
            theta_values=tuple(math.pi / 2 - math.atan(r) for r in roots))


def g_poly(c: NormalFormCoeffs) -> UniPoly:
    """(a11^2+1)s^4 + a11 a02 s^3 + 3(a11^2+1)s^2 + a11(4a02-a20)s + a02(a02-a20)."""
    a20, a11, a02 = c.a20, c.a11, c.a02
    return UniPoly([
        a02 * (a02 - a20),
        a11 * (4 * a02 - a20),
        3 * (a11 * a11 + 1),
        a11 * a02,
        a11 * a11 + 1,
    ])


def _real_roots_with_mults(q: UniPoly):
    """Numeric distinct real roots + exact multiplicities; s = 0 detected exactly."""
    roots, mults = [], []
    for factor, mult in squarefree_multiplicities(q):
        coeffs = factor.coeffs
        if coeffs[0] == 0:  # exact zero root
            roots.append(0.0)
            mults.append(mult)
            factor = UniPoly(coeffs[1:])
            if factor.degree < 1:
                continue
        cf = np.array([float(x) for x in factor.coeffs][::-1])
        if len(cf) < 2:
            continue
        rts = np.roots(cf)
        scale = max(1.0, float(np.max(np.abs(rts))) if len(rts) else 1.0)
        fl = factor.diff()
        for z in rts:
            if abs(z.imag) > 1e-9 * scale:
                continue
            x = float(z.real)
            for _ in range(4):  # Newton polish
                d = float(fl(x))
                if d == 0.0:
                    break
                x -= float(factor(x)) / d
            roots.append(x)
            mults.append(mult)
    return roots, mults


def count_distinct_real(q: UniPoly) -> int:
    return sturm_distinct_real_roots(q)


def gsol_report(c: NormalFormCoeffs) -> RootReport:
    """Zeros of the geodesic-curvature first term, as roots of g in s = cot."""
    q = g_poly(c)
    count = sturm_distinct_real_roots(q)
    roots, mults = _real_roots_with_mults(q)
    rep = RootReport.from_roots(roots, mults)
    assert rep.distinct_real_count == count, "Sturm vs numeric root disagreement"
    return rep


def fk_poly(c: NormalFormCoeffs) -> UniPoly:
    a20, a02 = c.a20, c.a02
    return UniPoly([a02 + 2 * a20, 0, a02 - a20, 0, 4 * a02 + a20])


def fk_roots(c: NormalFormCoeffs) -> RootReport:
    """Closed-form real roots of the k-first-term quartic p(s).

    Case analysis on a20 relative to a02 > 0; the displayed root formula is
    used with the quadratic-formula denominator 2(4 a02 + a20) (the display
    omits the factor 2; the roots below satisfy p(s) = 0 exactly).
    """
    a20, a02 = c.a20, c.a02
    if a20 == a02:
        raise HypothesisError("a20 = a02 excluded; use count_distinct_real(fk_poly(c))")
    if 4 * a02 + a20 == 0:
        r = math.sqrt(7.0 / 5.0)
        return RootReport.from_roots([r, -r], [1, 1])
    if a02 + 2 * a20 == 0:
        return RootReport.from_roots([0.0], [2])
    T = -(3 * a02 + 7 * a20) * (5 * a02 + a20)
    lo, hi = -4 * a02, Fraction(-1, 2) * a02
    if lo < a20 < hi:
        s2 = (float(a20 - a02) + math.sqrt(float(T))) / float(2 * (4 * a02 + a20))
        r = math.sqrt(s2)
        return RootReport.from_roots([r, -r], [1, 1])
    if -5 * a02 <= a20 < -4 * a02:
        if a20 == -5 * a02:  # T = 0: double roots at +-sqrt(3)
            r = math.sqrt(3.0)
            return RootReport.from_roots([r, -r], [2, 2])
        sq = math.sqrt(float(T))
        den = float(2 * (4 * a02 + a20))
        out = []
        for sgn in (1.0, -1.0):
            s2 = (float(a20 - a02) + sgn * sq) / den
            r = math.sqrt(s2)
            out += [r, -r]
        return RootReport.from_roots(out, [1] * 4)
    return RootReport(distinct_real_count=0)


def fdelta_poly(c: NormalFormCoeffs) -> UniPoly:
    a20, a11, a02 = c.a20, c.a11, c.a02
    qq = a11 * a11 + 1
    return UniPoly([
        -a02 * a02 * (a02 + 2 * a20),
        -2 * a02 * a11 * (a02 + 2 * a20),
        a02 * a02 * (2 * a02 + a20) - qq * (a02 + 2 * a20),
        2 * a02 * a11 * (2 * a02 + a20),
        qq * (2 * a02 + a20),
    ])


def fdelta_report(c: NormalFormCoeffs) -> RootReport:
    q = fdelta_poly(c)
    if q.is_zero():
        raise HypothesisError("F_delta vanished identically")
    count = sturm_distinct_real_roots(q)
    roots, mults = _real_roots_with_mults(q)
    return RootReport.from_roots(roots, mults) if count else RootReport(0)


def _cos2theta_angles(ratio: Fraction) -> list[float]:
    if abs(ratio) >= 1:
        return []
    half = math.acos(float(ratio)) / 2
    return [half, math.pi - half]


def kn_zero_angles(c: NormalFormCoeffs) -> list[float]:
    """theta in (0,pi)\\{pi/2} where the normal-curvature first term vanishes."""
    if c.a02 + c.a20 == 0:
        return []
    ratio = 2 * c.a02 / (c.a02 + c.a20)
    return [t for t in _cos2theta_angles(ratio) if abs(t - math.pi / 2) > 1e-12]


def beta_zero_angles(c: NormalFormCoeffs) -> list[float]:
    """Zeros of the striction-offset first term: pi/2 plus the cos(2 theta) branch."""
    out = [math.pi / 2]
    if c.a02 + c.a20 != 0:
        ratio = (3 * c.a02 + c.a20) / (c.a02 + c.a20)
        out += _cos2theta_angles(ratio)
    return sorted(set(out))


@dataclass(frozen=True)
class FlippedCounts:
    """Zeros in (0, pi) of the flipped-frame first-term brackets.

    delta_zero_count / k_zero_count follow the displayed brackets (the
    objects of the generic-count statement); *_verified are the counts for
    the brackets the pipeline actually reproduces.
    """

    delta_zero_count: int
    k_zero_count: int
    delta_zero_count_verified: int
    k_zero_count_verified: int


def flipped_counts(c: NormalFormCoeffs) -> FlippedCounts:
    point = {"a20": c.a20, "a11": c.a11, "a02": c.a02}
    def count(table):
        q = tables.bracket_to_cot_poly(table, point)
        if q.is_zero():
            raise HypothesisError("bracket vanished identically")
        return sturm_distinct_real_roots(q)
    return FlippedCounts(
        delta_zero_count=count(tables.DELTA_FLIPPED_DISPLAYED),
        k_zero_count=count(tables.K_FLIPPED_DISPLAYED),
        delta_zero_count_verified=count(tables.DELTA_FLIPPED_VERIFIED),
        k_zero_count_verified=count(tables.K_FLIPPED_VERIFIED),
    )
