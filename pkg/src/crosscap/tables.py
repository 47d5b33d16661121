"""Coefficient tables for the trigonometric brackets of the flipped-frame
developable invariants.

Each bracket is homogeneous in (cos theta, sin theta); entries are exact
polynomials in (a20, a11, a02).  Two variants are kept for delta and k:

* the *displayed* tables transcribed from the source text (degree 7 for
  delta, the 15-entry degree-14 table for k), and
* the *verified* tables (degree 5 and 9) that the numerical pipeline
  actually reproduces; the displayed variants fail the pipeline comparison
  in both leading order and coefficient shape, and are retained as data so
  the mismatch stays measurable.

Root-count statements for the displayed brackets are statements about
these polynomials and are checked as such.
"""
from __future__ import annotations

from fractions import Fraction

from .polycore import MultiPoly, UniPoly

PARAMS = ("a20", "a11", "a02")

_one = MultiPoly.constant(PARAMS, 1)
a20 = MultiPoly.var(PARAMS, "a20")
a11 = MultiPoly.var(PARAMS, "a11")
a02 = MultiPoly.var(PARAMS, "a02")
q = _one + a11 * a11  # 1 + a11^2


def _table(entries: dict) -> dict:
    deg = {sum(k) for k in entries}
    assert len(deg) == 1, f"inhomogeneous table: degrees {deg}"
    return dict(entries)


# -- verified first-term brackets (flipped frame) -----------------------------

# delta = B5(theta) / (sin(theta) A^3) r^3 + O(r^4)
DELTA_FLIPPED_VERIFIED = _table({
    (5, 0): -2 * a02 * q,
    (3, 2): -5 * a02 * q,
    (2, 3): a02 * a11 * (4 * a02 - a20),
    (1, 4): 3 * a02 * (a02 * a02 - a02 * a20 - 3 * q),
    (0, 5): -a02 * a11 * (5 * a02 - 2 * a20),
})

# k = B9(theta) / (sin(theta) A^4) r^6 + O(r^7)
K_FLIPPED_VERIFIED = _table({
    (9, 0): 6 * a02 * a02 * a11 * q,
    (8, 1): 6 * a02 * q * q,
    (7, 2): 3 * a02 * a11 * (23 * a02 - 5 * a20) * q,
    (6, 3): 6 * a02 * q * (5 * a02 * a02 - 5 * a02 * a20 - 6 * q),
    (5, 4): 3 * a02 * a11 * (a02**3 - a02 * a02 * a20 + 28 * a02 * q - 6 * a20 * q),
    (4, 5): 3 * a02 * (5 * a02 * a02 * a11 * a11 + 23 * a02 * a02
                       - 14 * a02 * a11 * a11 * a20 - 23 * a02 * a20
                       - 34 * q * q - a11 * a11 * a20 * a20),
    (3, 6): -3 * a02 * a11 * (14 * a02**3 - 18 * a02 * a02 * a20
                              - 15 * a02 * q + 4 * a02 * a20 * a20 + a20 * q),
    (2, 7): -3 * a02 * (5 * a02**4 - 10 * a02**3 * a20 - 35 * a02 * a02 * a11 * a11
                        + 5 * a02 * a02 * a20 * a20 - 32 * a02 * a02
                        + 36 * a02 * a11 * a11 * a20 + 32 * a02 * a20
                        + 36 * q * q - a11 * a11 * a20 * a20),
    (1, 8): 3 * a02 * a11 * (9 * a02**3 - 13 * a02 * a02 * a20 - 40 * a02 * q
                             + 4 * a02 * a20 * a20 + 16 * a20 * q),
    (0, 9): -3 * a02 * (a02**4 - 2 * a02**3 * a20 + 12 * a02 * a02 * a11 * a11
                        + a02 * a02 * a20 * a20 - 3 * a02 * a02
                        - 8 * a02 * a11 * a11 * a20 + 3 * a02 * a20
                        + 2 * a11 * a11 * a20 * a20),
})

# -- displayed (source-text) brackets -----------------------------------------

# delta display: a02/(sin^2 theta A^5) * sum_{i+j=7} [.] cos^i sin^j * r^2
DELTA_FLIPPED_DISPLAYED = _table({
    (7, 0): 3 * q * q,
    (6, 1): 7 * a02 * a11 * q,
    (5, 2): 8 * q * q + a02 * a02 * (2 * _one + 5 * a11 * a11),
    (4, 3): a02 * a11 * (a02 * a02 + 16 * q),
    (3, 4): 9 * q * q + a02 * a02 * (3 * _one + 6 * a11 * a11) + a02 * (a20 + 2 * a11 * a11 * a20),
    (2, 5): a11 * (-4 * a02 * a02 * (a02 - a20) + q * (23 * a02 - 2 * a20)),
    (1, 6): -a02 * (2 * a02**3 - a02 * (7 * _one + 19 * a11 * a11)
                    + a20 * (_one - 2 * a02 * a02 + 4 * a11 * a11)),
    (0, 7): a02 * a02 * a11 * (5 * a02 - 2 * a20),
})

# k display: -64 a02/(sin^4 theta A^4) * sum_{i+j=14} k_ij cos^i sin^j * r^4
K_FLIPPED_DISPLAYED = _table({
    (14, 0): -3 * q**4,
    (13, 1): -8 * a02 * a11 * q**3,
    (12, 2): -q * q * (9 * q * q + a02 * a02 * a11 * a11),
    (11, 3): a11 * q * (a02**3 * (7 * _one + 16 * a11 * a11) + q * q * (31 * a02 - 15 * a20)),
    (10, 4): (a02**4 * a11 * a11 * (16 * _one + 19 * a11 * a11)
              + q * q * (-69 * q * q + a02 * a02 * (46 * _one + 265 * a11 * a11)
                         - 7 * a02 * (3 * _one + 14 * a11 * a11) * a20)),
    (9, 5): -a11 * (-(a02**5) * (3 * _one + 8 * a11 * a11)
                    - a02**3 * (288 * _one + 869 * a11**2 + 581 * a11**4)
                    + a02 * a02 * (147 * _one + 400 * a11**2 + 253 * a11**4) * a20
                    + 18 * q**3 * (11 * a02 + a20)),
    (8, 6): (a02**3 * (a02**3 * a11 * a11
                       + a02 * (64 * _one + 586 * a11**2 + 609 * a11**4)
                       - (54 * _one + 353 * a11**2 + 332 * a11**4) * a20)
             + q * q * (a02 * a02 * (28 * _one - 25 * a11 * a11)
                        - 147 * q * q - a02 * (45 * _one + 152 * a11 * a11) * a20)),
    (7, 7): -a11 * (-(a02**5) * (188 * _one + 337 * a11 * a11)
                    - 4 * a02**3 * (91 * _one + 216 * a11**2 + 125 * a11**4)
                    - 21 * q**3 * a20
                    + a02**4 * (149 * _one + 233 * a11 * a11) * a20
                    + a02 * a02 * (311 * _one + 737 * a11**2 + 426 * a11**4) * a20
                    + a02 * q * (621 * q * q + 2 * a11 * a11 * a20 * a20)),
    (6, 8): a02 * a02 * (a02 * a02 * (121 * _one + 844 * a11**2 + 697 * a11**4
                                      + a02 * a02 * (24 * _one + 95 * a11 * a11))
                         - a02 * (135 * _one + 687 * a11**2 + 528 * a11**4
                                  + a02 * a02 * (24 * _one + 82 * a11 * a11)) * a20
                         - 2 * a11 * a11 * (3 * _one + 8 * a11 * a11) * a20 * a20
                         + 3 * q * q * (-36 * q * q
                                        - 35 * a02 * a02 * (_one + 9 * a11 * a11)
                                        + 2 * a02 * (-4 * _one + a11 * a11) * a20)),
    (5, 9): -a11 * (-11 * a02**7 - 2 * a02**5 * (161 * _one + 177 * a11 * a11)
                    + 11 * a02**6 * a20
                    + a02**4 * (289 * _one + 262 * a11 * a11) * a20
                    + a02**3 * (70 * _one + 485 * a11**4
                                + 6 * a20 * a20
                                + a11 * a11 * (555 * _one + 44 * a20 * a20))
                    + q * (24 * q * q * (23 * a02 - 2 * a20)
                           - a02 * (3 * _one + 10 * a11 * a11) * a20 * a20
                           + a02 * a02 * (218 * _one + 221 * a11 * a11) * a20)),
    (4, 10): (a02 * a02 * (a02**4 * (46 * _one + 29 * a11 * a11)
                           + a02 * a02 * (76 * _one + 425 * a11**2 + 233 * a11**4))
              + a02 * (4 * a02**4 * (-11 * _one + 6 * a11 * a11)
                       - a02 * a02 * (131 * _one + 660 * a11**2 + 520 * a11**4)) * a20
              + (-2 * a02**4 * (_one + 28 * a11 * a11)
                 + a02 * a02 * (_one + 34 * a11**2 + 38 * a11**4)) * a20 * a20
              - 3 * q * q * (45 * _one + 2 * a11 * a11 * (158 * _one + a20 * a20))),
    (3, 11): -a02 * a11 * (32 * a02**6 - 66 * a02**5 * a20
                           - 6 * a02 * q * (19 * _one + 64 * a11 * a11) * a20
                           + a02**3 * (366 * _one + 485 * a11 * a11) * a20
                           + 6 * (_one + 5 * a11**2 + 4 * a11**4) * a20 * a20
                           + a02**4 * (-322 * _one - 385 * a11 * a11 + 34 * a20 * a20)
                           + a02 * a02 * (72 * q * (7 * _one + 18 * a11 * a11)
                                          - (29 * _one + 52 * a11 * a11) * a20 * a20)),
    (2, 12): -a02 * a02 * (a02 * a02 * (50 * _one + 8 * a02**4 + 614 * a11**2
                                        + 804 * a11**4
                                        - a02 * a02 * (62 * _one + 157 * a11 * a11))
                           + 2 * a02 * (_one - 8 * a02**4 - 107 * a11**2 - 168 * a11**4
                                        + a02 * a02 * (35 * _one + 97 * a11 * a11)) * a20
                           + (2 * _one + 8 * a02**4 + 23 * a11**2 + 36 * a11**4
                              - 4 * a02 * a02 * (2 * _one + 7 * a11 * a11)) * a20 * a20),
    (1, 13): a02**3 * a11 * (17 * a02**4 - 19 * a02**3 * a20
                             + 2 * a02 * (7 * _one + 72 * a11 * a11) * a20
                             - 4 * (_one + 6 * a11 * a11) * a20 * a20
                             + 2 * a02 * a02 * (-32 * _one - 132 * a11 * a11 + a20 * a20)),
    (0, 14): -64 * a02**4 * (a02 * a02 * (-7 * _one + 2 * a02 * a02 + 36 * a11 * a11)
                             - 4 * a02 * (-2 * _one + a02 * a02 + 6 * a11 * a11) * a20
                             + (-_one + 2 * a02 * a02 + 6 * a11 * a11) * a20 * a20),
})


def bracket_eval(table: dict, params: dict, cos_t, sin_t):
    """Numeric evaluation of sum entry * cos^i sin^j."""
    tot = 0.0
    for (i, j), poly in table.items():
        tot = tot + poly.eval_float(params) * cos_t**i * sin_t**j
    return tot


def bracket_to_cot_poly(table: dict, point: dict) -> UniPoly:
    """Dehomogenize by sin^deg: exact UniPoly in x = cot(theta)."""
    deg = max(i + j for (i, j) in table)
    coefs = [Fraction(0)] * (deg + 1)
    for (i, j), poly in table.items():
        coefs[i] = poly.eval(point)
    return UniPoly(coefs)
