import numpy as np
import pytest
from fractions import Fraction

from crosscap.normal_form import NormalFormCoeffs


def random_coeff_sets(n, seed=20260810, bound=4, den_max=4):
    """Seeded rational coefficient sets with a02 > 0, |values| <= bound.

    The bound keeps the radius ladder r <~ 0.01 well inside the curvature
    scale 1/|a_ij| of the normal form; exact-algebra sweeps that do not
    evaluate numerically draw from wider ranges on their own.
    """
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < n:
        den20, den11, den02 = (int(rng.integers(1, den_max + 1)) for _ in range(3))
        a20 = Fraction(int(rng.integers(-bound * den20, bound * den20 + 1)), den20)
        a11 = Fraction(int(rng.integers(-bound * den11, bound * den11 + 1)), den11)
        a02 = Fraction(int(rng.integers(1, bound * den02 + 1)), den02)
        out.append(NormalFormCoeffs(a20, a11, a02))
    return out


@pytest.fixture(scope="session")
def named_sets():
    return [NormalFormCoeffs.from_triple(*t) for t in ((1, 0, 1), (-2, 0, 1), (-4, 0, 1))]


@pytest.fixture(scope="session")
def random_sets():
    return random_coeff_sets(20)
