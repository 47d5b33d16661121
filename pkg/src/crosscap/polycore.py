"""Exact rational polynomial algebra.

Univariate polynomials over Q (Sturm sequences, gcd, quartic invariants)
and sparse multivariate polynomials with a pseudo-division remainder in a
distinguished variable.  Everything here is pure and exact; floats never
enter.  `Rational` is the stdlib Fraction, which already maintains the
reduced-form / positive-denominator invariants.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Rational = Fraction


class DegreeError(ValueError):
    """Operation requires a specific degree."""


class ZeroPolyError(ValueError):
    """Operation undefined for the zero polynomial."""


class DivisionError(ValueError):
    """Divisor unusable (zero, or zero in the distinguished variable)."""


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        return Fraction(x)  # exact: floats are dyadic rationals
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(x)


class UniPoly:
    """Dense univariate polynomial, coefficients little-endian (index = degree)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def zero() -> "UniPoly":
        return UniPoly(())

    @staticmethod
    def monomial(deg: int, coeff=1) -> "UniPoly":
        return UniPoly([0] * deg + [coeff])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> Fraction:
        if not self.coeffs:
            raise ZeroPolyError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            f = _as_fraction(other)
            return UniPoly([c * f for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return UniPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise DivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly.zero(), self
        quot = [Fraction(0)] * (dq + 1)
        dlc = other.lc()
        for k in range(dq, -1, -1):
            if len(rem) != k + len(other.coeffs):
                continue
            c = rem[-1] / dlc
            quot[k] = c
            for j, b in enumerate(other.coeffs):
                rem[k + j] -= c * b
            while rem and rem[-1] == 0:
                rem.pop()
        return UniPoly(quot), UniPoly(rem)

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[1]

    def diff(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        """Horner evaluation; exact for Fraction input, float for float input."""
        acc = None
        for c in reversed(self.coeffs):
            if acc is None:
                acc = c if not isinstance(x, float) else float(c)
            else:
                acc = acc * x + (c if not isinstance(x, float) else float(c))
        if acc is None:
            return 0.0 if isinstance(x, float) else Fraction(0)
        return acc

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self * (1 / self.lc())

    def gcd(self, other: "UniPoly") -> "UniPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def compose(self, inner: "UniPoly") -> "UniPoly":
        acc = UniPoly.zero()
        for c in reversed(self.coeffs):
            acc = acc * inner + UniPoly([c])
        return acc

    def scale_input(self, lam) -> "UniPoly":
        """p(lam * x)."""
        lam = _as_fraction(lam)
        return UniPoly([c * lam**i for i, c in enumerate(self.coeffs)])

    def __repr__(self):
        if self.is_zero():
            return "UniPoly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*x^{i}" if i else f"{c}")
        return "UniPoly(" + " + ".join(terms) + ")"


def _int_coeffs(p: UniPoly) -> list[int]:
    """Coefficients scaled by the positive lcm of denominators."""
    if p.is_zero():
        return []
    scale = math.lcm(*(c.denominator for c in p.coeffs))
    return [int(c * scale) for c in p.coeffs]


def _iprimitive(c: list[int]) -> list[int]:
    g = 0
    for x in c:
        g = math.gcd(g, x)
    return [x // g for x in c] if g > 1 else list(c)


def _ineg(c):
    return [-x for x in c]


def _idiff(c):
    return [i * x for i, x in enumerate(c)][1:]


def _iprem_signsafe(f: list[int], g: list[int]) -> list[int]:
    """Pseudo-remainder of f by g scaled by a positive constant."""
    rem = list(f)
    dg = len(g) - 1
    lc = g[-1]
    steps = 0
    while len(rem) - 1 >= dg and any(rem):
        k = len(rem) - 1
        head = rem[-1]
        rem = [lc * x for x in rem]
        steps += 1
        for j, gc in enumerate(g):
            rem[k - dg + j] -= head * gc
        while rem and rem[-1] == 0:
            rem.pop()
    if lc < 0 and steps % 2:
        rem = _ineg(rem)
    return rem


def _igcd_poly(a: list[int], b: list[int]) -> list[int]:
    a, b = _iprimitive(a), _iprimitive(b)
    while b:
        a, b = b, _iprimitive(_iprem_signsafe(a, b))
    return a


def _idiv_exact(a: list[int], b: list[int]) -> list[int]:
    """Exact division of integer polynomials (quotient has rational steps)."""
    ra = [Fraction(x) for x in a]
    dq = len(a) - len(b)
    quot = [Fraction(0)] * (dq + 1)
    for k in range(dq, -1, -1):
        if len(ra) == k + len(b):
            c = ra[-1] / b[-1]
            quot[k] = c
            for j, bc in enumerate(b):
                ra[k + j] -= c * bc
            while ra and ra[-1] == 0:
                ra.pop()
    scale = math.lcm(*(c.denominator for c in quot)) if quot else 1
    return _iprimitive([int(c * scale) for c in quot])


def _sign_variations(signs: Sequence[int]) -> int:
    v, prev = 0, 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            v += 1
        prev = s
    return v


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _int_sturm_chain(p: UniPoly) -> list[list[int]]:
    """Primitive signed remainder chain of the square-free part: each member
    is a positive multiple of the classical Sturm polynomial."""
    if p.is_zero():
        raise ZeroPolyError("Sturm sequence of the zero polynomial")
    ip = _iprimitive(_int_coeffs(p))
    if len(ip) <= 1:
        return [ip]
    d = _idiff(ip)
    g = _igcd_poly(ip, d)
    if len(g) > 1:
        ip = _idiv_exact(ip, g)
        d = _idiff(ip)
    seq = [ip, _iprimitive(d)]
    while seq[-1]:
        nxt = _iprimitive(_ineg(_iprem_signsafe(seq[-2], seq[-1])))
        if not nxt:
            break
        seq.append(nxt)
    return seq


def sturm_sequence(p: UniPoly) -> list[UniPoly]:
    """Sturm chain of the square-free part (positive rescaling per member)."""
    return [UniPoly(c) for c in _int_sturm_chain(p)]


def sturm_distinct_real_roots(p: UniPoly) -> int:
    """Exact number of distinct real roots over all of R."""
    seq = _int_sturm_chain(p)
    if len(seq) <= 1:
        return 0
    at_minus = [_sign(q[-1]) * (-1) ** (len(q) - 1) for q in seq]
    at_plus = [_sign(q[-1]) for q in seq]
    return _sign_variations(at_minus) - _sign_variations(at_plus)


def _ieval(c: list[int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for coef in reversed(c):
        acc = acc * x + coef
    return acc


def gcd_degree(p: UniPoly, q: UniPoly) -> int:
    """Degree of gcd(p, q) via the primitive integer remainder sequence."""
    if p.is_zero() or q.is_zero():
        raise ZeroPolyError("gcd degree with zero polynomial")
    return len(_igcd_poly(_int_coeffs(p), _int_coeffs(q))) - 1


def sturm_roots_in(p: UniPoly, lo, hi) -> int:
    """Distinct real roots in the half-open interval (lo, hi]."""
    seq = _int_sturm_chain(p)
    vlo = _sign_variations([_sign(_ieval(q, Fraction(lo))) for q in seq])
    vhi = _sign_variations([_sign(_ieval(q, Fraction(hi))) for q in seq])
    return vlo - vhi


def cauchy_root_bound(p: UniPoly) -> Fraction:
    """All real roots lie in [-B, B]."""
    if p.is_zero():
        raise ZeroPolyError("root bound of zero polynomial")
    lc = abs(p.lc())
    return 1 + max((abs(c) / lc for c in p.coeffs[:-1]), default=Fraction(0))


def squarefree_multiplicities(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun-style square-free decomposition: [(factor_i, multiplicity_i)]."""
    if p.is_zero():
        raise ZeroPolyError("decomposition of zero polynomial")
    out = []
    g = p.gcd(p.diff())
    w = p.divmod(g)[0]
    mult = 1
    while w.degree > 0:
        y = w.gcd(g)
        fac = w.divmod(y)[0]
        if fac.degree > 0:
            out.append((fac, mult))
        w, g = y, g.divmod(y)[0]
        mult += 1
    return out


# -- quartic invariants ------------------------------------------------------

@dataclass(frozen=True)
class QuarticInvariants:
    """Discriminant-chain invariants of a x^4 + b x^3 + c x^2 + d x + e."""

    delta: Fraction
    delta0: Fraction
    p_inv: Fraction
    r_inv: Fraction


def quartic_invariant_exprs(a, b, c, d, e):
    """Delta, Delta0, P, R over any commutative ring (duck-typed)."""
    delta = (
        256 * a**3 * e**3 - 192 * a**2 * b * d * e**2 - 128 * a**2 * c**2 * e**2
        + 144 * a**2 * c * d**2 * e - 27 * a**2 * d**4 + 144 * a * b**2 * c * e**2
        - 6 * a * b**2 * d**2 * e - 80 * a * b * c**2 * d * e + 18 * a * b * c * d**3
        + 16 * a * c**4 * e - 4 * a * c**3 * d**2 - 27 * b**4 * e**2
        + 18 * b**3 * c * d * e - 4 * b**3 * d**3 - 4 * b**2 * c**3 * e
        + b**2 * c**2 * d**2
    )
    delta0 = c**2 - 3 * b * d + 12 * a * e
    p_inv = 8 * a * c - 3 * b**2
    r_inv = b**3 + 8 * a**2 * d - 4 * a * b * c
    return delta, delta0, p_inv, r_inv


def quartic_invariants(q: UniPoly) -> QuarticInvariants:
    if q.degree != 4:
        raise DegreeError(f"expected degree 4, got {q.degree}")
    e, d, c, b, a = q.coeffs
    return QuarticInvariants(*quartic_invariant_exprs(a, b, c, d, e))


def resultant(p: UniPoly, q: UniPoly) -> Fraction:
    """Sylvester resultant via fraction-free Gaussian elimination."""
    m, n = p.degree, q.degree
    if m < 0 or n < 0:
        raise ZeroPolyError("resultant with zero polynomial")
    if m == 0:
        return p.coeffs[0] ** n
    if n == 0:
        return q.coeffs[0] ** m
    size = m + n
    mat = [[Fraction(0)] * size for _ in range(size)]
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    for i in range(n):
        for j, c in enumerate(pc):
            mat[i][i + j] = c
    for i in range(m):
        for j, c in enumerate(qc):
            mat[n + i][i + j] = c
    # Bareiss
    sign = 1
    prev = Fraction(1)
    for k in range(size - 1):
        if mat[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if mat[r][k] != 0), None)
            if swap is None:
                return Fraction(0)
            mat[k], mat[swap] = mat[swap], mat[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) / prev
            mat[i][k] = Fraction(0)
        prev = mat[k][k]
    return sign * mat[size - 1][size - 1]


# -- multivariate ------------------------------------------------------------

class MultiPoly:
    """Sparse multivariate polynomial over Q; monomials keyed by exponent tuple."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, Fraction] | None = None):
        self.vars = tuple(variables)
        clean = {}
        for m, c in (terms or {}).items():
            c = _as_fraction(c)
            if c:
                clean[tuple(m)] = c
        self.terms = clean

    @staticmethod
    def constant(variables, value) -> "MultiPoly":
        v = _as_fraction(value)
        return MultiPoly(variables, {(0,) * len(variables): v} if v else {})

    @staticmethod
    def var(variables, name) -> "MultiPoly":
        i = tuple(variables).index(name)
        m = [0] * len(variables)
        m[i] = 1
        return MultiPoly(variables, {tuple(m): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "MultiPoly"):
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return (self - MultiPoly.constant(self.vars, other)).is_zero()
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, tuple(sorted(self.terms.items()))))

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.vars, other)
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, Fraction(0)) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return MultiPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return MultiPoly.constant(self.vars, other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            f = _as_fraction(other)
            return MultiPoly(self.vars, {m: c * f for m, c in self.terms.items()})
        self._check(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = out.get(m, Fraction(0)) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return MultiPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = MultiPoly.constant(self.vars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def eval(self, point: Mapping[str, Fraction]):
        """Exact full evaluation."""
        vals = [_as_fraction(point[v]) for v in self.vars]
        tot = Fraction(0)
        for m, c in self.terms.items():
            t = c
            for e, x in zip(m, vals):
                if e:
                    t *= x**e
            tot += t
        return tot

    def eval_float(self, point: Mapping[str, float]) -> float:
        vals = [float(point[v]) for v in self.vars]
        tot = 0.0
        for m, c in self.terms.items():
            t = float(c)
            for e, x in zip(m, vals):
                if e:
                    t *= x**e
            tot += t
        return tot

    def diff(self, name: str) -> "MultiPoly":
        i = self.vars.index(name)
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                mm = list(m)
                mm[i] -= 1
                out[tuple(mm)] = c * m[i]
        return MultiPoly(self.vars, out)

    def as_unipoly_in(self, name: str) -> list["MultiPoly"]:
        """Coefficients (little-endian) w.r.t. the distinguished variable."""
        i = self.vars.index(name)
        deg = max((m[i] for m in self.terms), default=0)
        coefs = [dict() for _ in range(deg + 1)]
        for m, c in self.terms.items():
            mm = list(m)
            k = mm[i]
            mm[i] = 0
            coefs[k][tuple(mm)] = c
        return [MultiPoly(self.vars, d) for d in coefs]

    @staticmethod
    def from_unipoly_in(name: str, coefs: Sequence["MultiPoly"]) -> "MultiPoly":
        if not coefs:
            raise ValueError("empty coefficient list")
        variables = coefs[0].vars
        i = variables.index(name)
        out = {}
        for k, poly in enumerate(coefs):
            for m, c in poly.terms.items():
                mm = list(m)
                mm[i] += k
                key = tuple(mm)
                v = out.get(key, Fraction(0)) + c
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return MultiPoly(variables, out)

    def degree_in(self, name: str) -> int:
        i = self.vars.index(name)
        return max((m[i] for m in self.terms), default=-1)

    def __repr__(self):
        if not self.terms:
            return "MultiPoly(0)"
        parts = []
        for m, c in sorted(self.terms.items()):
            t = [str(c)]
            for v, e in zip(self.vars, m):
                if e:
                    t.append(f"{v}^{e}" if e > 1 else v)
            parts.append("*".join(t))
        return "MultiPoly(" + " + ".join(parts) + ")"


@dataclass(frozen=True)
class PseudoRemainder:
    """rem and the multiplier m in  m * dividend = quot * divisor + rem."""

    rem: MultiPoly
    quot: MultiPoly
    multiplier: MultiPoly

    def check_identity(self, dividend: MultiPoly, divisor: MultiPoly) -> bool:
        lhs = self.multiplier * dividend
        rhs = self.quot * divisor + self.rem
        return (lhs - rhs).is_zero()


def param_remainder(dividend: MultiPoly, divisor: MultiPoly, var: str) -> PseudoRemainder:
    """Fraction-free pseudo-division in the distinguished variable.

    The recorded multiplier is lc(divisor)^(deg f - deg g + 1), so sign
    statements about the true remainder hold after dividing by it when it
    has constant sign.
    """
    ddeg = divisor.degree_in(var)
    if ddeg <= 0:
        raise DivisionError("divisor must have positive degree in the distinguished variable")
    fdeg = dividend.degree_in(var)
    dcoefs = divisor.as_unipoly_in(var)
    lc = dcoefs[-1]
    if fdeg < ddeg:
        one = MultiPoly.constant(dividend.vars, 1)
        return PseudoRemainder(dividend, MultiPoly.constant(dividend.vars, 0), one)
    steps = fdeg - ddeg + 1
    zero = MultiPoly.constant(dividend.vars, 0)
    rem = dividend.as_unipoly_in(var)
    quot = [zero for _ in range(fdeg - ddeg + 1)]
    for k in range(fdeg, ddeg - 1, -1):
        head = rem[k] if k < len(rem) else zero
        # rem <- lc*rem - head*x^(k-ddeg)*divisor, quot <- lc*quot + head*x^(k-ddeg)
        rem = [lc * c for c in rem]
        quot = [lc * c for c in quot]
        quot[k - ddeg] = quot[k - ddeg] + head
        for j, dc in enumerate(dcoefs):
            rem[k - ddeg + j] = rem[k - ddeg + j] - head * dc
        while len(rem) > 1 and rem[-1].is_zero():
            rem.pop()
    multiplier = lc**steps
    rem_poly = MultiPoly.from_unipoly_in(var, rem) if rem else zero
    quot_poly = MultiPoly.from_unipoly_in(var, quot)
    if rem_poly.degree_in(var) >= ddeg:
        raise DivisionError("pseudo-division failed to reduce the degree")
    out = PseudoRemainder(rem_poly, quot_poly, multiplier)
    if __debug__:
        assert out.check_identity(dividend, divisor)
    return out
