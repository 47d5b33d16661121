"""Geometry of curves encircling a cross-cap (Whitney umbrella).

Subpackages:
  polycore      exact rational polynomial algebra (Sturm, quartic invariants)
  normal_form   the polynomial normal form and its transformations
  surface_geom  fundamental forms, Christoffel symbols, blow-up normal
  circle_frame  frames and curvature functions along the blown-up circle
  ruled         ruled surfaces, striction, normal developable
  asymptotics   first-term extraction and closed-form comparison
  root_atlas    executable root-count statements
  cli           command-line interface
"""
from .normal_form import NormalFormCoeffs, build_f0, dupin_classify, normalize_a02
from .circle_frame import CircleCurve, FrameChoice
from .asymptotics import ClosedFormId, compare, estimate_first_term
from .jets import backend_name

__version__ = "0.1.0"

__all__ = [
    "NormalFormCoeffs", "build_f0", "dupin_classify", "normalize_a02",
    "CircleCurve", "FrameChoice", "ClosedFormId", "compare",
    "estimate_first_term", "backend_name", "__version__",
]
