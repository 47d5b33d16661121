"""Command-line interface.

Subcommands: eval, verify, mesh, sweep, first-term, roots, dupin.
Exit codes: 0 ok, 2 usage, 3 domain error, 4 I/O error.
CSV output uses '.' decimals, '\n' newlines, and shortest round-trip float
formatting, so repeated runs with the same seed are byte-identical.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

import numpy as np

from . import asymptotics, meshio, root_atlas, ruled
from .asymptotics import ClosedFormId, closed_form_eval, compare
from .circle_frame import (CircleCurve, FrameChoice, NearAxisError, curvature_data,
                           frame, kappa_g, kappa_g_intrinsic, kappa_n, sweep)
from .normal_form import InvalidCoeffs, NormalFormCoeffs, build_f0, dupin_classify
from .polycore import UniPoly, sturm_distinct_real_roots
from .surface_geom import SingularPointError

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_IO = 0, 2, 3, 4


def _fmt(x) -> str:
    return repr(float(x))


def _fmt12(x) -> str:
    return f"{float(x):.12g}"


def _parse_coeffs(args) -> NormalFormCoeffs:
    if args.coeffs_file:
        try:
            with open(args.coeffs_file) as fh:
                return NormalFormCoeffs.from_json(fh.read())
        except OSError as e:
            raise SystemExit(_fail(f"cannot read coeffs file: {e}", EXIT_IO))
    if args.coeffs:
        parts = args.coeffs.split(",")
        if len(parts) != 3:
            raise SystemExit(_fail("--coeffs wants a20,a11,a02", EXIT_USAGE))
        return NormalFormCoeffs.from_triple(*(Fraction(p) for p in parts))
    raise SystemExit(_fail("need --coeffs or --coeffs-file", EXIT_USAGE))


def _fail(msg: str, code: int) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return code


def _grid_guard(args) -> float:
    return 0.05 if args.guard is None else args.guard


def _eval_guard(args) -> float:
    from .circle_frame import THETA_GUARD
    return THETA_GUARD if args.guard is None else args.guard


def _theta_grid(args) -> np.ndarray:
    guard = _grid_guard(args)
    return np.linspace(guard, np.pi - guard, args.theta_points)


def _radii(args):
    if args.radii is None:
        return asymptotics.DEFAULT_RADII
    vals = tuple(float(t) for t in args.radii.split(","))
    if len(vals) < 4 or any(b >= a for a, b in zip(vals, vals[1:])) or min(vals) <= 0:
        raise SystemExit(_fail("--radii wants >= 4 strictly decreasing positive values",
                               EXIT_USAGE))
    return vals


def _write_csv(path, header, rows) -> None:
    text = ",".join(header) + "\n"
    for row in rows:
        text += ",".join(str(x) if isinstance(x, (int, str)) else _fmt(x)
                         for x in row) + "\n"
    if path:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- eval ----------------------------------------------------------------------

QUANTITIES = ("kappa_g", "kappa_g_intrinsic", "kappa_n", "kappa_n_surface",
              "kappa1", "kappa2", "kappa3", "kappa2_hat", "kappa3_hat", "l",
              "delta", "k", "beta", "K", "normal", "frame")


def cmd_eval(args) -> int:
    c = _parse_coeffs(args)
    q = args.quantity
    if q not in QUANTITIES:
        return _fail(f"unknown quantity {q!r}; choose from {', '.join(QUANTITIES)}",
                     EXIT_USAGE)
    choice = (FrameChoice.FLIPPED_BINORMAL if args.flipped
              else FrameChoice.NORMAL_TILDE)
    th = args.theta
    try:
        if q == "normal":
            if args.r == 0:
                from .normal_form import extended_normal
                vec = np.atleast_1d(extended_normal(th, c).squeeze())
            else:
                from .surface_geom import unit_normal
                vec = unit_normal(build_f0(c), args.r * np.cos(th), args.r * np.sin(th))
            # snap float-trig residue (cos(pi/2) ~ 6e-17) for display only
            vec = np.where(np.abs(vec) < 1e-13, 0.0, vec)
            print(" ".join(_fmt12(x) for x in vec))
            return EXIT_OK
        if args.r <= 0:
            return _fail("r must be positive for this quantity", EXIT_USAGE)
        cc = CircleCurve(args.r, c)
        if q == "frame":
            fr = frame(cc, th, choice)
            for name, vec in (("e", fr.e), ("b", fr.b), ("n", fr.n)):
                print(name, " ".join(_fmt12(x) for x in vec))
            return EXIT_OK
        if q == "kappa_g":
            print(_fmt12(kappa_g(cc, th, guard=_eval_guard(args))))
        elif q == "kappa_g_intrinsic":
            print(_fmt12(kappa_g_intrinsic(cc, th, guard=_eval_guard(args))))
        elif q == "kappa_n":
            print(_fmt12(kappa_n(cc, th, guard=_eval_guard(args))))
        elif q == "kappa_n_surface":
            from .circle_frame import kappa_n_surface
            print(_fmt12(kappa_n_surface(cc, th, guard=_eval_guard(args))))
        elif q == "beta":
            print(_fmt12(ruled.beta_striction(cc, [th])[0]))
        elif q == "K":
            print(_fmt12(ruled.normal_line_K(cc, [th], args.beta)[0]))
        elif q in ("delta", "k", "l"):
            sw = sweep(cc, [th], choice)
            print(_fmt12(sw.values(q if q != "l" else "l")[0]))
        else:
            cd = curvature_data(cc, th, choice)
            val = {"kappa1": cd.kappa1, "kappa2": cd.kappa2, "kappa3": cd.kappa3,
                   "kappa2_hat": cd.kappa2_hat, "kappa3_hat": cd.kappa3_hat}[q]
            print(_fmt12(val))
        return EXIT_OK
    except (NearAxisError, SingularPointError, ruled.OnCurveError,
            asymptotics.DomainError, InvalidCoeffs) as e:
        return _fail(str(e), EXIT_DOMAIN)


# -- verify --------------------------------------------------------------------

def _report(lines) -> int:
    ok_all = True
    for name, ok, detail in lines:
        print(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
        ok_all &= ok
    return EXIT_OK if ok_all else 1


def _rand_rationals(rng, n, den_max=40, num_max=400):
    for _ in range(n):
        yield Fraction(int(rng.integers(-num_max, num_max + 1)),
                       int(rng.integers(1, den_max + 1)))


def _suite_thm32(args, c):
    th = _theta_grid(args)
    rep = compare(ClosedFormId.KAPPA_G, c, th, tol=args.tol)
    lines = [("kappa_g first term = |sin| g(cot)/A", rep.ok,
              f"max_rel={rep.max_rel_err:.3g} order={rep.order_measured}")]
    cc = CircleCurve(0.05, c)
    sub = th[:: max(1, len(th) // 40)]
    a = kappa_g(cc, sub)
    b = kappa_g_intrinsic(cc, sub)
    err = float(np.max(np.abs(a - b) / np.maximum(np.abs(a), 1e-12)))
    lines.append(("intrinsic (Christoffel) path == extrinsic path", err < 1e-6,
                  f"max_rel={err:.3g}"))
    return lines


def _suite_thm33(args, c):
    rng = np.random.default_rng(args.seed)
    counts = {0: 0, 1: 0, 2: 0}
    bad = 0
    n = 2000
    vals = list(_rand_rationals(rng, 2 * n))
    for a20, a11 in zip(vals[:n], vals[n:]):
        q = root_atlas.g_poly(NormalFormCoeffs(a20, a11, Fraction(1)))
        k = sturm_distinct_real_roots(q)
        if k in counts:
            counts[k] += 1
        else:
            bad += 1
    return [(f"Sturm count of g in {{0,1,2}} on {n} rational samples", bad == 0,
             f"histogram={counts} outside={bad}")]


def _suite_lem34(args, c):
    from .polycore import MultiPoly, param_remainder, quartic_invariant_exprs
    rng = np.random.default_rng(args.seed)
    # no triple/quadruple roots: gcd(g, g') degree <= 1 on rational samples
    n = 2000
    vals = list(_rand_rationals(rng, 2 * n))
    worst = -1
    for a20, a11 in zip(vals[:n], vals[n:]):
        q = root_atlas.g_poly(NormalFormCoeffs(a20, a11, Fraction(1)))
        worst = max(worst, q.gcd(q.diff()).degree)
    lines = [(f"gcd(g, g') degree <= 1 on {n} rational samples", worst <= 1,
              f"max_degree={worst}")]
    # remainder signs after positive-multiplier normalization
    P = ("a20", "a11")
    a20v = MultiPoly.var(P, "a20")
    a11v = MultiPoly.var(P, "a11")
    one = MultiPoly.constant(P, 1)
    qq = a11v * a11v + one
    a, b_, cc_, d, e = (qq, a11v, 3 * qq, a11v * (4 * one - a20v), one - a20v)
    delta, delta0, _, r_inv = quartic_invariant_exprs(a, b_, cc_, d, e)
    neg = {"R": 0, "D0": 0}
    tested = 0
    prs = {name: param_remainder(delta, divisor, "a20")
           for name, divisor in (("R", r_inv), ("D0", delta0))}
    for a11s in _rand_rationals(rng, 100, den_max=20, num_max=60):
        if a11s == 0:
            continue
        tested += 1
        for name, pr in prs.items():
            mult = pr.multiplier.eval({"a20": 0, "a11": a11s})
            remv = pr.rem.eval({"a20": 0, "a11": a11s})
            if mult == 0:
                continue
            if (remv / mult if mult > 0 else -remv / abs(mult)) < 0:
                neg[name] += 1
    lines.append((f"Rem(Delta,R) < 0 and Rem(Delta,Delta0) < 0 at {tested} samples",
                  neg["R"] == tested and neg["D0"] == tested,
                  f"neg_R={neg['R']} neg_D0={neg['D0']}"))
    return lines


def _suite_lem35(args, c):
    from .polycore import MultiPoly, quartic_invariant_exprs
    P = ("a11",)
    a11v = MultiPoly.var(P, "a11")
    one = MultiPoly.constant(P, 1)
    qq = a11v * a11v + one
    # g with a02 = 1: P-invariant as a polynomial identity
    _, _, p_inv, _ = quartic_invariant_exprs(qq, a11v, 3 * qq, a11v * 4, one)
    want = 24 * a11v**4 + 45 * a11v * a11v + 24 * one
    ok = (p_inv - want).is_zero()
    lines = [("P(a11) == 24 a11^4 + 45 a11^2 + 24 identically", ok, "exact")]
    rng = np.random.default_rng(args.seed)
    pos = sum(1 for v in _rand_rationals(rng, 100)
              if p_inv.eval({"a11": v}) > 0)
    lines.append(("P(a11) > 0 at 100 rational samples", pos == 100, f"pos={pos}"))
    return lines


def _suite_thm311(args, c):
    th = _theta_grid(args)
    rep = compare(ClosedFormId.KAPPA_N, c, th, tol=args.tol)
    lines = [("kappa_n first term matches closed form", rep.ok,
              f"max_rel={rep.max_rel_err:.3g}")]
    angles = root_atlas.kn_zero_angles(c)
    vals = closed_form_eval(ClosedFormId.KAPPA_N, th, c)
    signs = np.sign(vals)
    changes = [float(t) for prev, t, s1, s2 in
               zip(th[:-1], th[1:], signs[:-1], signs[1:])
               if s1 * s2 < 0 and abs(t - np.pi / 2) > 3 * (th[1] - th[0])]
    ok = len(changes) == len(angles) and all(
        min(abs(a - b) for b in changes) < 2 * (th[1] - th[0]) for a in angles) \
        if angles else len(changes) == 0
    lines.append(("kn_zero_angles matches sign changes of the first term", ok,
                  f"angles={[round(a, 4) for a in angles]}"))
    return lines


def _suite_sec33(args, c):
    th = _theta_grid(args)
    rep = compare(ClosedFormId.BETA_STRICTION, c, th, tol=args.tol)
    rep2 = compare(ClosedFormId.K_NORMAL_LINE, c, th, tol=args.tol, beta=args.beta)
    return [
        ("striction offset first term (verified constant)", rep.ok,
         f"max_rel={rep.max_rel_err:.3g} order={rep.order_measured}"),
        ("normal-line K first term (verified: order 2)", rep2.ok,
         f"max_rel={rep2.max_rel_err:.3g} order={rep2.order_measured}"),
    ]


def _suite_thm42(args, c):
    rng = np.random.default_rng(args.seed)
    # part 1: zeros of F_k2hat on (0,pi)\{pi/2}: tan^2 = -a02/(2 a02 + a20)
    n = 1000
    vals = list(_rand_rationals(rng, 2 * n))
    ok1 = True
    hist = {}
    literal_hist = {}  # counts restricted to the displayed hypothesis 2 a20 + a02 < 0
    for a20, a11 in zip(vals[:n], vals[n:]):
        cs = NormalFormCoeffs(a20, a11, Fraction(1))
        two_a02_a20 = 2 * cs.a02 + cs.a20
        expect = 2 if two_a02_a20 < 0 else 0
        if two_a02_a20 == 0:
            continue
        q = UniPoly([cs.a02, 0, two_a02_a20])  # (2a02+a20) t^2 + a02, t = tan
        got = sturm_distinct_real_roots(q)
        hist[got] = hist.get(got, 0) + 1
        if 2 * cs.a20 + cs.a02 < 0:
            literal_hist[got] = literal_hist.get(got, 0) + 1
        ok1 &= got == expect
    lines = [("F_k2hat zeros off pi/2: 2 iff 2 a02 + a20 < 0 else 0", ok1,
              f"hist={hist}; under displayed hypothesis 2a20+a02<0: {literal_hist}")]
    # part 2: F_delta zero counts
    cnt = {}
    bad = 0
    for a20, a11 in zip(vals[:n], vals[n:]):
        cs = NormalFormCoeffs(a20, a11, Fraction(1))
        k = sturm_distinct_real_roots(root_atlas.fdelta_poly(cs))
        cnt[k] = cnt.get(k, 0) + 1
        if k > 4:
            bad += 1
    lines.append(("F_delta zero count <= 4 on samples", bad == 0, f"hist={cnt}"))
    special = NormalFormCoeffs(-2 * c.a02, c.a11, c.a02)
    k0 = sturm_distinct_real_roots(root_atlas.fdelta_poly(special))
    lines.append(("2 a02 + a20 = 0 forces zero count 0", k0 == 0, f"count={k0}"))
    return lines


def _suite_thm44(args, c):
    th = _theta_grid(args)
    beta_first = closed_form_eval(ClosedFormId.BETA_STRICTION, th, c)
    f2 = asymptotics.f2_bracket(c, th)
    zb = set()
    zf = set()
    for arr, out in ((beta_first, zb), (f2, zf)):
        s = np.sign(arr)
        for i in range(len(th) - 1):
            if s[i] * s[i + 1] < 0 or s[i] == 0:
                out.add(i)
    ok = zb == zf
    return [("zero set of beta's first term == zero set of F_k2hat", ok,
             f"{len(zb)} zero cells on the grid")]


def _suite_thm46(args, c):
    rng = np.random.default_rng(args.seed)
    n = 2000
    vals = list(_rand_rationals(rng, n))
    bad = 0
    tested = 0
    for a20 in vals:
        cs = NormalFormCoeffs(a20, 0, Fraction(1))
        if cs.a20 == cs.a02:
            continue
        tested += 1
        try:
            rep = root_atlas.fk_roots(cs)
            want = sturm_distinct_real_roots(root_atlas.fk_poly(cs))
            if rep.distinct_real_count != want:
                bad += 1
        except root_atlas.HypothesisError:
            bad += 1
    lines = [(f"closed-form case analysis == Sturm count on {tested} samples",
              bad == 0, f"mismatches={bad}")]
    spec_c = NormalFormCoeffs(-4, 0, 1)
    rep = root_atlas.fk_roots(spec_c)
    want = np.sqrt(7.0 / 5.0)
    err = abs(abs(rep.roots[0]) - want) + abs(abs(rep.roots[-1]) - want)
    lines.append(("(-4,0,1): roots are +-sqrt(7/5)", err < 1e-10, f"err={err:.2e}"))
    return lines


def _suite_thm47(args, c):
    th = _theta_grid(args)
    rep = compare(ClosedFormId.KAPPA2_FLIPPED, c, th, tol=args.tol)
    g_first = asymptotics.f1_bracket(c, th)
    k2_first = closed_form_eval(ClosedFormId.KAPPA2_FLIPPED, th, c)
    same = np.all((np.abs(g_first) < 1e-12) == (np.abs(k2_first) < 1e-12))
    return [
        ("flipped kappa2 first term == sin^4 g(cot)/A", rep.ok,
         f"max_rel={rep.max_rel_err:.3g}"),
        ("its zero set is the zero set of g", bool(same), "grid check"),
    ]


def _suite_thm48(args, c):
    rng = np.random.default_rng(args.seed)
    n = 300
    vals = list(_rand_rationals(rng, 2 * n, den_max=20, num_max=100))
    hist_d, hist_k = {}, {}
    hist_dv, hist_kv = {}, {}
    ok = True
    for a20, a11 in zip(vals[:n], vals[n:]):
        cs = NormalFormCoeffs(a20, a11, Fraction(1))
        fc = root_atlas.flipped_counts(cs)
        hist_d[fc.delta_zero_count] = hist_d.get(fc.delta_zero_count, 0) + 1
        hist_k[fc.k_zero_count] = hist_k.get(fc.k_zero_count, 0) + 1
        hist_dv[fc.delta_zero_count_verified] = hist_dv.get(fc.delta_zero_count_verified, 0) + 1
        hist_kv[fc.k_zero_count_verified] = hist_kv.get(fc.k_zero_count_verified, 0) + 1
        ok &= fc.delta_zero_count % 2 == 1 and fc.delta_zero_count <= 7
        ok &= fc.k_zero_count % 2 == 0 and fc.k_zero_count <= 14
    return [
        (f"displayed brackets: delta odd<=7, k even<=14 on {n} samples", ok,
         f"delta={hist_d} k={hist_k}"),
        ("verified-bracket counts (recorded)", True,
         f"delta={hist_dv} k={hist_kv}"),
    ]


def _suite_dev_flatness(args, c):
    worst = 0.0
    th = np.linspace(0.4, np.pi - 0.4, 60)
    for r in (0.05, 0.1, 0.2):
        cc = CircleCurve(r, c)
        for choice in FrameChoice:
            dd = ruled.normal_developable(cc, choice)
            offs = ruled.striction_offset(dd.surface, th)
            for beta in (0.05, -0.05, 0.12):
                keep = np.abs(offs - beta) > 0.01
                K = ruled.gaussian_curvature(dd.surface, th, beta)
                if np.any(keep):
                    worst = max(worst, float(np.max(np.abs(K[keep]))))
    return [("normal developable has |K| < 1e-6 off the striction set",
             worst < 1e-6, f"max_abs_K={worst:.3g}")]


SUITES = {
    "thm3.2": _suite_thm32,
    "thm3.3": _suite_thm33,
    "lem3.4": _suite_lem34,
    "lem3.5": _suite_lem35,
    "thm3.11": _suite_thm311,
    "sec3.3": _suite_sec33,
    "thm4.2": _suite_thm42,
    "thm4.4": _suite_thm44,
    "thm4.6": _suite_thm46,
    "thm4.7": _suite_thm47,
    "thm4.8": _suite_thm48,
    "dev-flatness": _suite_dev_flatness,
}


def cmd_verify(args) -> int:
    if args.suite == "all":
        names = list(SUITES)
    elif args.suite in SUITES:
        names = [args.suite]
    else:
        return _fail(f"unknown suite {args.suite!r}; choose from "
                     f"{', '.join(SUITES)} or 'all'", EXIT_USAGE)
    c = _parse_coeffs(args)
    code = EXIT_OK
    for name in names:
        print(f"== {name}")
        rc = _report(SUITES[name](args, c))
        code = code or rc
    return code


# -- mesh ----------------------------------------------------------------------

def cmd_mesh(args) -> int:
    c = _parse_coeffs(args)
    if args.resolution < 2:
        return _fail("resolution must be >= 2", EXIT_USAGE)
    n = args.resolution
    try:
        if args.surface == "f0":
            f = build_f0(c)
            us = np.linspace(-args.extent, args.extent, n)
            pts = meshio.grid_points(lambda u, v: f.eval(u, v), us, us)
        elif args.surface == "normal-line":
            cc = CircleCurve(args.r, c)
            rs = ruled.normal_line_surface(cc)
            gd = _grid_guard(args)
            th = np.linspace(gd, np.pi - gd, n)
            bs = np.linspace(-args.extent, args.extent, n)
            pts = meshio.grid_points(lambda t, b: rs.point(t, b), th, bs)
        elif args.surface == "developable":
            cc = CircleCurve(args.r, c)
            choice = (FrameChoice.FLIPPED_BINORMAL if args.flipped
                      else FrameChoice.NORMAL_TILDE)
            dd = ruled.normal_developable(cc, choice)
            gd = _grid_guard(args)
            th = np.linspace(gd, np.pi - gd, n)
            bs = np.linspace(-args.extent, args.extent, n)
            pts = meshio.grid_points(lambda t, b: dd.surface.point(t, b), th, bs)
        else:
            return _fail(f"unknown surface {args.surface!r}", EXIT_USAGE)
    except (ruled.UndefinedDirectorError, SingularPointError) as e:
        return _fail(str(e), EXIT_DOMAIN)
    try:
        meshio.write_obj(args.out, pts, n, n)
    except OSError as e:
        return _fail(f"cannot write {args.out}: {e}", EXIT_IO)
    print(f"wrote {args.out}: {n}x{n} vertices, {2 * (n - 1) ** 2} triangles")
    return EXIT_OK


# -- sweep ---------------------------------------------------------------------

def cmd_sweep(args) -> int:
    c = None
    if args.atlas == "first-terms":
        c = _parse_coeffs(args)
        th = _theta_grid(args)[:: max(1, args.theta_points // 24)]
        rows = []
        for cid in ClosedFormId:
            beta = args.beta if cid is ClosedFormId.K_NORMAL_LINE else None
            rep = compare(cid, c, th, radii=_radii(args), tol=args.tol, beta=beta)
            for row in rep.rows:
                rows.append((cid.value, row.theta, row.pipeline_value,
                             row.closed_form_value, row.rel_err,
                             "PASS" if row.rel_err < args.tol else "FAIL"))
        _write_csv(args.out, ("id", "theta", "pipeline_value",
                              "closed_form_value", "rel_err", "verdict"), rows)
        return EXIT_OK
    if args.atlas == "roots":
        if args.grid:
            n = args.grid
            span = Fraction(10)
            points = [(-span / 2 + span * i / (n - 1), -span / 2 + span * j / (n - 1))
                      for i in range(n) for j in range(n)]
        else:
            rng = np.random.default_rng(args.seed)
            points = [(Fraction(int(rng.integers(-200, 201)), int(rng.integers(1, 21))),
                       Fraction(int(rng.integers(-200, 201)), int(rng.integers(1, 21))))
                      for _ in range(args.samples)]
        rows = []
        for a20, a11 in points:
            cs = NormalFormCoeffs(a20, a11, Fraction(1))
            g_count = sturm_distinct_real_roots(root_atlas.g_poly(cs))
            fd = sturm_distinct_real_roots(root_atlas.fdelta_poly(cs))
            fk = sturm_distinct_real_roots(root_atlas.fk_poly(cs))
            fc = root_atlas.flipped_counts(cs)
            rows.append((str(a20), str(a11), "1", g_count, fd, fk,
                         fc.delta_zero_count, fc.k_zero_count))
        rows.sort()
        _write_csv(args.out, ("a20", "a11", "a02", "g_count", "fdelta_count",
                              "fk_count", "delta_flip_count", "k_flip_count"), rows)
        return EXIT_OK
    if args.atlas == "flipped-counts":
        rng = np.random.default_rng(args.seed)
        rows = []
        for _ in range(args.samples):
            a20 = Fraction(int(rng.integers(-100, 101)), int(rng.integers(1, 11)))
            a11 = Fraction(int(rng.integers(-100, 101)), int(rng.integers(1, 11)))
            cs = NormalFormCoeffs(a20, a11, Fraction(1))
            fc = root_atlas.flipped_counts(cs)
            rows.append((str(a20), str(a11), "1", fc.delta_zero_count,
                         fc.k_zero_count, fc.delta_zero_count_verified,
                         fc.k_zero_count_verified))
        rows.sort()
        _write_csv(args.out, ("a20", "a11", "a02", "delta_count", "k_count",
                              "delta_count_verified", "k_count_verified"), rows)
        return EXIT_OK
    return _fail(f"unknown atlas {args.atlas!r}", EXIT_USAGE)


# -- first-term / roots / dupin --------------------------------------------------

def cmd_first_term(args) -> int:
    c = _parse_coeffs(args)
    try:
        cid = ClosedFormId(args.quantity)
    except ValueError:
        return _fail(f"unknown first-term id {args.quantity!r}; choose from "
                     f"{', '.join(i.value for i in ClosedFormId)}", EXIT_USAGE)
    th = _theta_grid(args)[:: max(1, args.theta_points // 24)]
    beta = args.beta if cid is ClosedFormId.K_NORMAL_LINE else None
    try:
        rep = compare(cid, c, th, radii=_radii(args), tol=args.tol, beta=beta,
                      variant="displayed" if args.displayed else "verified")
    except asymptotics.OrderUnresolvedError as e:
        return _fail(str(e), EXIT_DOMAIN)
    print(f"id={cid.value} variant={rep.variant} order_measured={rep.order_measured} "
          f"order_expected={rep.order_expected} max_rel_err={rep.max_rel_err:.6g} "
          f"verdict={'PASS' if rep.ok else 'FAIL'}")
    return EXIT_OK if rep.ok else 1


def cmd_roots(args) -> int:
    c = _parse_coeffs(args)
    rep = root_atlas.gsol_report(c)
    print(f"g: count={rep.distinct_real_count} roots={[round(r, 12) for r in rep.roots]} "
          f"mults={list(rep.multiplicities)} "
          f"theta={[round(t, 12) for t in rep.theta_values]}")
    try:
        fk = root_atlas.fk_roots(c)
        print(f"F_k: count={fk.distinct_real_count} roots={[round(r, 12) for r in fk.roots]}")
    except root_atlas.HypothesisError as e:
        print(f"F_k: closed form not applicable ({e}); Sturm count="
              f"{sturm_distinct_real_roots(root_atlas.fk_poly(c))}")
    fd = root_atlas.fdelta_report(c)
    print(f"F_delta: count={fd.distinct_real_count}")
    print(f"kappa_n zero angles: {[round(t, 12) for t in root_atlas.kn_zero_angles(c)]}")
    print(f"beta zero angles: {[round(t, 12) for t in root_atlas.beta_zero_angles(c)]}")
    fc = root_atlas.flipped_counts(c)
    print(f"flipped counts: delta={fc.delta_zero_count} k={fc.k_zero_count} "
          f"(verified brackets: delta={fc.delta_zero_count_verified} "
          f"k={fc.k_zero_count_verified})")
    return EXIT_OK


def cmd_dupin(args) -> int:
    c = _parse_coeffs(args)
    print(dupin_classify(c).value)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="crosscap",
                                 description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, r_default=0.1):
        p.add_argument("--coeffs", help="a20,a11,a02 (exact 'p/q' allowed)")
        p.add_argument("--coeffs-file", help="JSON coefficient file")
        p.add_argument("--theta-points", type=int, default=720)
        p.add_argument("--guard", type=float, default=None,
                       help="theta grid band (default 0.05); also the near-axis "
                            "guard for eval (default 1e-3)")
        p.add_argument("--tol", type=float, default=1e-3)
        p.add_argument("--radii", default=None,
                       help="comma-separated decreasing radii for first-term fits")
        p.add_argument("--seed", type=int, default=20260810)
        p.add_argument("--r", type=float, default=r_default)
        p.add_argument("--beta", type=float, default=0.15)
        p.add_argument("--flipped", action="store_true")
        p.add_argument("--out", default=None)

    p = sub.add_parser("eval", help="print one quantity at (r, theta)")
    common(p)
    p.add_argument("quantity")
    p.add_argument("theta", type=float)
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("verify", help="run a verification suite")
    common(p)
    p.add_argument("suite")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("mesh", help="export an OBJ mesh")
    common(p)
    p.add_argument("surface", choices=("f0", "normal-line", "developable"))
    p.add_argument("--extent", type=float, default=0.75)
    p.add_argument("--resolution", type=int, default=80)
    p.set_defaults(fn=cmd_mesh)

    p = sub.add_parser("sweep", help="parameter sweeps as CSV")
    common(p)
    p.add_argument("atlas", choices=("roots", "first-terms", "flipped-counts"))
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--grid", type=int, default=0,
                   help="roots atlas: NxN grid over [-5,5]^2 instead of random samples")
    p.set_defaults(fn=cmd_sweep)

    p = sub.add_parser("first-term", help="compare one first term against its closed form")
    common(p)
    p.add_argument("quantity")
    p.add_argument("--displayed", action="store_true",
                   help="compare against the displayed (uncorrected) form")
    p.set_defaults(fn=cmd_first_term)

    p = sub.add_parser("roots", help="root atlas for one coefficient set")
    common(p)
    p.set_defaults(fn=cmd_roots)

    p = sub.add_parser("dupin", help="Dupin indicatrix class")
    common(p)
    p.set_defaults(fn=cmd_dupin)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.out is None and getattr(args, "command", "") == "mesh":
        args.out = "surface.obj"
    try:
        return args.fn(args)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
