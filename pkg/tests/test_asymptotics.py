"""First-term extraction and the closed-form registry."""
import math

import numpy as np
import pytest

from crosscap.asymptotics import (ClosedFormId, DomainError,
                                  OrderUnresolvedError, REGISTRY, closed_form_eval,
                                  compare, estimate_first_term, displayed_form_eval,
                                  displayed_order)
from crosscap.normal_form import NormalFormCoeffs

C11 = NormalFormCoeffs.from_triple(1, 0, 1)


def test_synthetic_first_term():
    est = estimate_first_term(lambda r, th: (2 * r**2 + r**3) * np.ones_like(th),
                              np.array([0.5, 1.0]))
    assert est.order == 2
    assert np.allclose(est.coeff, 2.0, atol=1e-6)


def test_order_unresolved():
    rng = np.random.default_rng(0)

    def noisy(r, th):
        return rng.uniform(0.5, 1.5) * r ** rng.uniform(0, 4) * np.ones_like(th)

    with pytest.raises(OrderUnresolvedError):
        estimate_first_term(noisy, np.array([1.0]))


def test_minimum_order_wins_at_coefficient_zeros():
    """Where the leading coefficient vanishes the local order is higher; the
    grid-wide order is the smallest resolved one."""

    def fn(r, th):
        return np.cos(th) * r**2 + r**3  # coefficient zero at pi/2

    th = np.array([0.3, math.pi / 2, 2.8])
    est = estimate_first_term(fn, th)
    assert est.order == 2


def test_requires_enough_radii():
    with pytest.raises(ValueError):
        estimate_first_term(lambda r, th: r * np.ones_like(th), np.array([1.0]),
                            radii=(0.1, 0.05, 0.025))


def test_kappa_g_first_term_id():
    th = np.linspace(0.2, math.pi - 0.2, 25)
    rep = compare(ClosedFormId.KAPPA_G, C11, th)
    assert rep.ok and rep.order_measured == 0


def test_k_order_six():
    th = np.linspace(0.3, math.pi - 0.3, 12)
    spec = REGISTRY[ClosedFormId.F_K]
    est = estimate_first_term(spec.pipeline(C11, None), th)
    assert est.order == 6


@pytest.mark.parametrize("cid", list(ClosedFormId))
def test_registry_verified_forms_match_pipeline(cid, named_sets):
    th = np.linspace(0.25, math.pi - 0.25, 15)
    for c in named_sets:
        rep = compare(cid, c, th, tol=1e-3, beta=0.15)
        assert rep.ok, (cid, c.abc, rep.max_rel_err, rep.order_measured)


DISPLAY_DEVIATIONS = {
    ClosedFormId.F_DELTA: "factor 4",
    ClosedFormId.F_K: "(a02 - a20) for (a02 + a20)",
    ClosedFormId.BETA_STRICTION: "factor 2",
    ClosedFormId.K_NORMAL_LINE: "order 0 display vs measured order 2",
    ClosedFormId.DELTA_FLIPPED: "degree-7 bracket at r^2 vs degree-5 at r^3",
    ClosedFormId.K_FLIPPED: "degree-14 table at r^4 vs degree-9 at r^6",
}


def test_displayed_forms_that_disagree_are_flagged():
    """Every registry entry with status != confirmed carries a displayed variant,
    and that variant measurably fails against the pipeline."""
    th = np.linspace(0.3, math.pi - 0.3, 10)
    c = NormalFormCoeffs.from_triple(-2, 0, 1)
    for cid, spec in REGISTRY.items():
        if spec.status == "confirmed":
            assert spec.displayed_coeff is None
            continue
        assert cid in DISPLAY_DEVIATIONS
        rep = compare(cid, c, th, tol=1e-3, beta=0.15, variant="displayed")
        assert not rep.ok, cid


def test_exact_display_deviation_factors():
    """The constant slips are pinned exactly: displayed/verified ratios."""
    th = np.linspace(0.3, math.pi - 0.3, 9)
    c = NormalFormCoeffs.from_triple(-2, 0.25, 1.25)
    for cid, ratio in ((ClosedFormId.F_DELTA, 4.0), (ClosedFormId.BETA_STRICTION, 2.0)):
        got = displayed_form_eval(cid, th, c) / closed_form_eval(cid, th, c)
        assert np.allclose(got, ratio, rtol=1e-12)
    # F_K: displayed/verified == (a02 - a20)/(a02 + a20)
    a20, _, a02 = c.abc
    got = displayed_form_eval(ClosedFormId.F_K, th, c) / closed_form_eval(ClosedFormId.F_K, th, c)
    assert np.allclose(got, (a02 - a20) / (a02 + a20), rtol=1e-12)
    assert displayed_order(ClosedFormId.DELTA_FLIPPED) == 2
    assert displayed_order(ClosedFormId.K_FLIPPED) == 4
    assert displayed_order(ClosedFormId.F_DELTA) == 3  # only the constant differs


def test_confirmed_forms_displayed_equals_verified():
    th = np.linspace(0.3, math.pi - 0.3, 7)
    c = NormalFormCoeffs.from_triple(3, -0.5, 2)
    for cid in (ClosedFormId.KAPPA_G, ClosedFormId.F_K2HAT, ClosedFormId.F_K3HAT,
                ClosedFormId.KAPPA2_FLIPPED, ClosedFormId.KAPPA_N):
        a = closed_form_eval(cid, th, c)
        b = displayed_form_eval(cid, th, c)
        assert np.array_equal(a, b)


def test_perturbed_table_entry_fails_compare():
    """Regression guard: a deliberate fault in one bracket entry trips the
    comparison (tables are live data, not dead text)."""
    from crosscap import tables
    key = (8, 1)  # 6 a02 (1+a11^2)^2: never zero
    orig = tables.K_FLIPPED_VERIFIED[key]
    try:
        tables.K_FLIPPED_VERIFIED[key] = orig * 2
        th = np.linspace(0.3, math.pi - 0.3, 10)
        rep = compare(ClosedFormId.K_FLIPPED, NormalFormCoeffs.from_triple(-2, 0, 1),
                      th, tol=1e-3)
        assert not rep.ok
    finally:
        tables.K_FLIPPED_VERIFIED[key] = orig


def test_residual_decays_one_order_faster(named_sets):
    """After removing the fitted first term the residual decays at least one
    power of r faster."""
    th = np.linspace(0.4, math.pi - 0.4, 9)
    c = named_sets[1]
    spec = REGISTRY[ClosedFormId.F_DELTA]
    fn = spec.pipeline(c, None)
    est = estimate_first_term(fn, th)
    radii = np.array([0.01, 0.005, 0.0025])
    res = np.array([np.max(np.abs(fn(r, th) - est.coeff * r**est.order))
                    for r in radii])
    slopes = np.diff(np.log(res)) / np.diff(np.log(radii))
    assert np.all(slopes >= est.order + 0.8)


def test_domain_errors():
    with pytest.raises(DomainError):
        closed_form_eval(ClosedFormId.KAPPA_G, np.array([0.0]), C11)
    with pytest.raises(DomainError):
        closed_form_eval(ClosedFormId.K_NORMAL_LINE, np.array([1.0]), C11, beta=None)


def test_fk_zero_location_minus4():
    """F_k for (-4,0,1): zeros at cot = +-sqrt(7/5)."""
    c = NormalFormCoeffs.from_triple(-4, 0, 1)
    for s in (math.sqrt(7 / 5), -math.sqrt(7 / 5)):
        th = math.pi / 2 - math.atan(s)
        val = closed_form_eval(ClosedFormId.F_K, np.array([th]), c)
        assert abs(val[0]) < 1e-12


def test_fdelta_bracket_special_case_form():
    """At 2 a02 + a20 = 0 the bracket is exactly 3 a02 sin^2 A^2 (the proof
    text displays A^2 alone); either way it is positive on (0, pi)."""
    from crosscap.asymptotics import fdelta_bracket
    from crosscap.normal_form import calA
    th = np.linspace(0.01, math.pi - 0.01, 301)
    for a11, a02 in ((0.0, 1.0), (0.75, 1.5), (-1.2, 0.8)):
        c = NormalFormCoeffs.from_triple(-2 * a02, a11, a02)
        got = fdelta_bracket(c, th)
        want = 3 * a02 * np.sin(th) ** 2 * calA(th, c) ** 2
        assert np.allclose(got, want, rtol=1e-12)
        assert np.all(got > 0)
