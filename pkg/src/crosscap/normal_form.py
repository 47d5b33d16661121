"""The cross-cap normal form as exact polynomial data.

The surface is the truncated polynomial map

    f(u, v) = (u, u v + B(v), sum_j A_j(u, v)),
    B(v) = sum_{i>=3} b_i/i! v^i,
    A_j  = sum_i a_{i,j-i}/(i!(j-i)!) u^i v^{j-i},   a02 > 0,

with the tail beyond the truncation degree set to zero.  Coefficients are
stored as exact rationals (floats convert exactly); numeric evaluation
mirrors them to float arrays.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

import numpy as np

from . import jets


class InvalidCoeffs(ValueError):
    pass


def _rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        return Fraction(x)
    return Fraction(x)


@dataclass(frozen=True)
class NormalFormCoeffs:
    """2-jet invariants plus optional higher coefficients.

    higher_a maps (i, j) with i + j >= 3 to a_{ij}; higher_b maps i >= 3
    to b_i.  degree_k is the truncation degree (>= 2).
    """

    a20: Fraction
    a11: Fraction
    a02: Fraction
    higher_a: dict = field(default_factory=dict)
    higher_b: dict = field(default_factory=dict)
    degree_k: int = 3

    def __post_init__(self):
        object.__setattr__(self, "a20", _rat(self.a20))
        object.__setattr__(self, "a11", _rat(self.a11))
        object.__setattr__(self, "a02", _rat(self.a02))
        if self.a02 <= 0:
            raise InvalidCoeffs(f"a02 must be positive, got {self.a02}")
        if self.degree_k < 2:
            raise InvalidCoeffs(f"degree_k must be >= 2, got {self.degree_k}")
        ha = {}
        for (i, j), v in dict(self.higher_a).items():
            if not (3 <= i + j <= self.degree_k):
                raise InvalidCoeffs(f"a_({i},{j}) outside 3 <= i+j <= degree_k")
            ha[(int(i), int(j))] = _rat(v)
        hb = {}
        for i, v in dict(self.higher_b).items():
            if not (3 <= i <= self.degree_k):
                raise InvalidCoeffs(f"b_{i} outside 3 <= i <= degree_k")
            hb[int(i)] = _rat(v)
        object.__setattr__(self, "higher_a", ha)
        object.__setattr__(self, "higher_b", hb)

    @property
    def abc(self) -> tuple[float, float, float]:
        return float(self.a20), float(self.a11), float(self.a02)

    @staticmethod
    def from_triple(a20, a11, a02) -> "NormalFormCoeffs":
        return NormalFormCoeffs(_rat(a20), _rat(a11), _rat(a02))

    @staticmethod
    def from_json(doc: str | dict) -> "NormalFormCoeffs":
        """Parse {"a20": ..., "a11": ..., "a02": ..., "higher": {"i,j": ...},
        "higher_b": {"i": ...}, "degree_k": ...}; "p/q" strings are exact."""
        if isinstance(doc, str):
            doc = json.loads(doc)
        higher = {}
        for key, v in (doc.get("higher") or {}).items():
            i, j = (int(t) for t in key.split(","))
            higher[(i, j)] = _rat(v)
        higher_b = {int(k): _rat(v) for k, v in (doc.get("higher_b") or {}).items()}
        default_k = max([3, *(i + j for (i, j) in higher), *higher_b])
        return NormalFormCoeffs(
            a20=_rat(doc["a20"]), a11=_rat(doc["a11"]), a02=_rat(doc["a02"]),
            higher_a=higher, higher_b=higher_b,
            degree_k=int(doc.get("degree_k", default_k)),
        )

    def to_json(self) -> str:
        doc = {
            "a20": str(self.a20), "a11": str(self.a11), "a02": str(self.a02),
            "higher": {f"{i},{j}": str(v) for (i, j), v in self.higher_a.items()},
            "higher_b": {str(i): str(v) for i, v in self.higher_b.items()},
            "degree_k": self.degree_k,
        }
        return json.dumps(doc, sort_keys=True)


class Poly2:
    """Dense bivariate polynomial with exact coefficients and a float mirror."""

    __slots__ = ("grid", "_float")

    def __init__(self, grid):
        deg = len(grid)
        self.grid = tuple(tuple(_rat(c) for c in row) + (Fraction(0),) * (deg - len(row))
                          for row in grid)
        self._float = np.array([[float(c) for c in row] for row in self.grid])

    @staticmethod
    def zeros(n: int) -> "Poly2":
        return Poly2([[0] * n for _ in range(n)])

    def coeff(self, i: int, j: int) -> Fraction:
        if i < len(self.grid) and j < len(self.grid[i]):
            return self.grid[i][j]
        return Fraction(0)

    def with_coeff(self, i: int, j: int, v) -> "Poly2":
        n = max(len(self.grid), i + 1, j + 1)
        g = [[self.coeff(a, b) for b in range(n)] for a in range(n)]
        g[i][j] = _rat(v)
        return Poly2(g)

    def diff_u(self) -> "Poly2":
        n = len(self.grid)
        g = [[(a + 1) * self.coeff(a + 1, b) for b in range(n)] for a in range(n)]
        return Poly2(g)

    def diff_v(self) -> "Poly2":
        n = len(self.grid)
        g = [[(b + 1) * self.coeff(a, b + 1) for b in range(n)] for a in range(n)]
        return Poly2(g)

    def eval_exact(self, u, v) -> Fraction:
        u, v = _rat(u), _rat(v)
        tot = Fraction(0)
        for i, row in enumerate(self.grid):
            for j, c in enumerate(row):
                if c:
                    tot += c * u**i * v**j
        return tot

    def eval(self, u: float, v: float) -> float:
        # Horner in v then u
        res = 0.0
        for row in self._float[::-1]:
            acc = 0.0
            for c in row[::-1]:
                acc = acc * v + c
            res = res * u + acc
        return res

    def eval_jet(self, u, v):
        return jets.poly2_eval(self._float, u, v)

    def compose_scaled(self, su: Fraction, sv: Fraction, divide_by: Fraction) -> "Poly2":
        """p(su*u, sv*v)/divide_by, exactly."""
        n = len(self.grid)
        g = [[self.coeff(i, j) * su**i * sv**j / divide_by for j in range(n)]
             for i in range(n)]
        return Poly2(g)


@dataclass(frozen=True)
class BivarPoly3:
    """The three components of the truncated normal form."""

    x: Poly2
    y: Poly2
    z: Poly2

    def components(self):
        return (self.x, self.y, self.z)

    def eval(self, u: float, v: float):
        return np.array([self.x.eval(u, v), self.y.eval(u, v), self.z.eval(u, v)])

    def eval_exact(self, u, v):
        return (self.x.eval_exact(u, v), self.y.eval_exact(u, v), self.z.eval_exact(u, v))

    def partial(self, which: str) -> "BivarPoly3":
        if which == "u":
            return BivarPoly3(self.x.diff_u(), self.y.diff_u(), self.z.diff_u())
        if which == "v":
            return BivarPoly3(self.x.diff_v(), self.y.diff_v(), self.z.diff_v())
        raise ValueError(f"unknown partial {which!r}")

    def jacobian(self, u: float, v: float):
        fu = self.partial("u").eval(u, v)
        fv = self.partial("v").eval(u, v)
        return np.column_stack([fu, fv])


def build_f0(c: NormalFormCoeffs) -> BivarPoly3:
    """Assemble the truncated polynomial map from the coefficients."""
    n = c.degree_k + 1
    fx = Poly2.zeros(n).with_coeff(1, 0, 1)
    fy = Poly2.zeros(n).with_coeff(1, 1, 1)
    for i, b in c.higher_b.items():
        fy = fy.with_coeff(0, i, b / math.factorial(i))
    fz = Poly2.zeros(n)
    fz = fz.with_coeff(2, 0, c.a20 / 2).with_coeff(1, 1, c.a11).with_coeff(0, 2, c.a02 / 2)
    for (i, j), a in c.higher_a.items():
        fz = fz.with_coeff(i, j, a / (math.factorial(i) * math.factorial(j)))
    return BivarPoly3(fx, fy, fz)


def normalize_a02(c: NormalFormCoeffs) -> NormalFormCoeffs:
    """Rescale so a02 = 1: divide the target by a02 and substitute u -> a02*u.

    On the 2-jet this is a20 -> a20*a02 (a11 unchanged); higher
    coefficients transform as a_{ij} -> a_{ij}*a02^(i-1), b_i -> b_i/a02.
    """
    s = c.a02
    return NormalFormCoeffs(
        a20=c.a20 * s,
        a11=c.a11,
        a02=Fraction(1),
        higher_a={(i, j): v * s ** (i - 1) for (i, j), v in c.higher_a.items()},
        higher_b={i: v / s for i, v in c.higher_b.items()},
        degree_k=c.degree_k,
    )


class DupinClass(Enum):
    CIRCLE = "circle"
    ELLIPSE = "ellipse"
    PARALLEL_LINES = "parallel_lines"
    HYPERBOLA = "hyperbola"
    EMPTY_OR_DEGENERATE = "empty_or_degenerate"


def dupin_classify(c: NormalFormCoeffs) -> DupinClass:
    """Conic type of (a20/2)u^2 + a11 uv + (a02/2)v^2 = z0 (z0 > 0)."""
    det = c.a20 * c.a02 - c.a11**2  # 4 * det of the quadratic form
    if c.a11 == 0 and c.a20 == c.a02:
        return DupinClass.CIRCLE
    if det > 0:
        # a02 > 0 forces positive definite
        return DupinClass.ELLIPSE
    if det < 0:
        return DupinClass.HYPERBOLA
    # det == 0 with a02 > 0: rank-1 positive semidefinite
    return DupinClass.PARALLEL_LINES


def calA(theta, c: NormalFormCoeffs):
    """sqrt(cos^2 + (a11 cos + a02 sin)^2); positive for a02 > 0."""
    a11, a02 = float(c.a11), float(c.a02)
    th = np.asarray(theta, dtype=float)
    cs, sn = np.cos(th), np.sin(th)
    return np.sqrt(cs**2 + (a11 * cs + a02 * sn) ** 2)


def extended_normal(theta, c: NormalFormCoeffs):
    """Unit normal extended to r = 0 on the blow-up: (0, -a11 c - a02 s, c)/A."""
    a11, a02 = float(c.a11), float(c.a02)
    th = np.asarray(theta, dtype=float)
    cs, sn = np.cos(th), np.sin(th)
    a = np.sqrt(cs**2 + (a11 * cs + a02 * sn) ** 2)
    return np.stack([np.zeros_like(th), (-a11 * cs - a02 * sn) / a, cs / a])
