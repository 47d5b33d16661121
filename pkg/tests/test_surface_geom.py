"""Fundamental forms, Christoffel symbols, curvature, blow-up normal."""
import math
from fractions import Fraction

import numpy as np
import pytest

from crosscap.normal_form import BivarPoly3, NormalFormCoeffs, Poly2, build_f0, extended_normal
from crosscap.surface_geom import (SingularPointError, christoffel,
                                   fundamental_forms, gaussian_curvature,
                                   normal_sign_flip, unit_normal)
from tests.conftest import random_coeff_sets


def _plane():
    # f = (u, v, 0)
    return BivarPoly3(Poly2([[0, 0], [1, 0]]), Poly2([[0, 1], [0, 0]]), Poly2([[0]]))


def _graph(zpoly: Poly2):
    return BivarPoly3(Poly2([[0, 0], [1, 0]]), Poly2([[0, 1], [0, 0]]), zpoly)


def test_plane_forms():
    ff = fundamental_forms(_plane(), 0.3, -0.7)
    assert (ff.E, ff.F, ff.G) == (1, 0, 1)
    assert (ff.L, ff.M, ff.N) == (0, 0, 0)
    ga = christoffel(_plane(), 0.1, 0.9)
    assert all(abs(v) < 1e-15 for v in
               (ga.uuu, ga.uuv, ga.uvv, ga.vuu, ga.vuv, ga.vvv))
    assert gaussian_curvature(_plane(), 0.0, 0.0) == 0


def test_sphere_and_paraboloid_curvature():
    # unit-sphere osculating paraboloid z = (u^2+v^2)/2 has K = 1 at the origin
    zz = Poly2([[0, 0, Fraction(1, 2)], [0, 0, 0], [Fraction(1, 2), 0, 0]])
    K = gaussian_curvature(_graph(zz), 0.0, 0.0)
    assert math.isclose(K, 1.0, rel_tol=1e-12)
    # cylinder-like graph z = u^2/2 is developable: K = 0 everywhere
    zc = Poly2([[0], [0], [Fraction(1, 2)]])
    for u, v in ((0.0, 0.0), (0.4, -0.3), (-0.2, 0.5)):
        assert abs(gaussian_curvature(_graph(zc), u, v)) < 1e-10


def test_forms_match_finite_differences():
    c = NormalFormCoeffs.from_triple(1, 0, 1)
    f = build_f0(c)
    u, v = 0.1, 0.1
    ff = fundamental_forms(f, u, v)
    h = 1e-5

    def emb(uu, vv):
        return f.eval(uu, vv)

    fu = (emb(u + h, v) - emb(u - h, v)) / (2 * h)
    fv = (emb(u, v + h) - emb(u, v - h)) / (2 * h)
    fuu = (emb(u + h, v) - 2 * emb(u, v) + emb(u - h, v)) / h**2
    fvv = (emb(u, v + h) - 2 * emb(u, v) + emb(u, v - h)) / h**2
    fuv = (emb(u + h, v + h) - emb(u + h, v - h) - emb(u - h, v + h)
           + emb(u - h, v - h)) / (4 * h**2)
    n = np.cross(fu, fv)
    n /= np.linalg.norm(n)
    assert math.isclose(ff.E, fu @ fu, rel_tol=1e-8)
    assert math.isclose(ff.F, fu @ fv, rel_tol=1e-6, abs_tol=1e-8)
    assert math.isclose(ff.G, fv @ fv, rel_tol=1e-8)
    assert math.isclose(ff.L, fuu @ n, rel_tol=1e-4, abs_tol=1e-6)
    assert math.isclose(ff.M, fuv @ n, rel_tol=1e-4, abs_tol=1e-6)
    assert math.isclose(ff.N, fvv @ n, rel_tol=1e-4, abs_tol=1e-6)


def test_singular_point_rejected():
    f = build_f0(NormalFormCoeffs.from_triple(1, 0, 1))
    with pytest.raises(SingularPointError):
        fundamental_forms(f, 0.0, 0.0)
    with pytest.raises(SingularPointError):
        christoffel(f, 0.0, 0.0)


def test_christoffel_metric_compatibility():
    """dE/du = 2 (E G^u_uu + F G^v_uu) and the v-counterpart."""
    rng = np.random.default_rng(3)
    c = NormalFormCoeffs(Fraction(-2), Fraction(1, 2), Fraction(3, 2))
    f = build_f0(c)
    fu, fv = f.partial("u"), f.partial("v")
    h = 1e-6
    for _ in range(20):
        u, v = rng.uniform(0.05, 0.4, 2)
        ga = christoffel(f, u, v)
        ff = fundamental_forms(f, u, v)

        def metric(uu, vv):
            a = fu.eval(uu, vv)
            b = fv.eval(uu, vv)
            return np.array([a @ a, a @ b, b @ b])

        dEdu = (metric(u + h, v)[0] - metric(u - h, v)[0]) / (2 * h)
        assert math.isclose(dEdu, 2 * (ff.E * ga.uuu + ff.F * ga.vuu),
                            rel_tol=1e-6, abs_tol=1e-6)
        dGdv = (metric(u, v + h)[2] - metric(u, v - h)[2]) / (2 * h)
        assert math.isclose(dGdv, 2 * (ff.F * ga.uvv + ff.G * ga.vvv),
                            rel_tol=1e-6, abs_tol=1e-6)


def test_christoffel_blowup_limits():
    """r Gamma^v_uu -> a20 (a11 cos + a02 sin)/A^2 and r Gamma^u_uu -> 0."""
    c = NormalFormCoeffs.from_triple(1, 0, 1)
    f = build_f0(c)
    a20, a11, a02 = c.abc
    for theta in (0.7, 1.3, 2.4):
        cs, sn = math.cos(theta), math.sin(theta)
        a2 = cs**2 + (a11 * cs + a02 * sn) ** 2
        want = a20 * (a11 * cs + a02 * sn) / a2
        errs = []
        for r in (1e-3, 1e-4, 1e-5):
            ga = christoffel(f, r * cs, r * sn)
            errs.append(abs(r * ga.vuu - want))
            assert abs(r * ga.uuu) < 1e-3  # O(1) symbol: r * it -> 0
        assert errs[-1] < 1e-4 and errs[-1] < errs[0]


def test_unit_normal_converges_to_extended_normal():
    """First-order convergence in r to the blow-up normal, 100 sets."""
    thetas = np.linspace(0.05, 2 * np.pi - 0.05, 40)
    for c in random_coeff_sets(100, seed=77):
        f = build_f0(c)
        worst = {}
        for r in (1e-2, 5e-3):
            n0 = extended_normal(thetas, c)
            errs = []
            for i, th in enumerate(thetas):
                n = unit_normal(f, r * math.cos(th), r * math.sin(th))
                errs.append(np.linalg.norm(n - n0[:, i]))
            worst[r] = max(errs)
        # halving r at least halves the deviation (order >= 1), small slack
        assert worst[5e-3] <= 0.6 * worst[1e-2] + 1e-14
        assert normal_sign_flip(f, c) == 1


def test_sphere_patch_unit_curvature():
    """Degree-6 Taylor graph of the unit sphere: K = 1 within 1e-8 near 0."""
    # z = w/2 + w^2/8 + w^3/16, w = u^2 + v^2
    n = 7
    g = [[Fraction(0)] * n for _ in range(n)]
    from math import comb
    for k, coef in ((1, Fraction(1, 2)), (2, Fraction(1, 8)), (3, Fraction(1, 16))):
        for i in range(k + 1):  # (u^2+v^2)^k expansion
            g[2 * i][2 * (k - i)] += coef * comb(k, i)
    zz = Poly2(g)
    for u, v in ((0.0, 0.0), (0.02, -0.015), (0.03, 0.01)):
        assert abs(gaussian_curvature(_graph(zz), u, v) - 1.0) < 1e-8
