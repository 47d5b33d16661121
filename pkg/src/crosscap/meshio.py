"""OBJ mesh export for the parametric surfaces."""
from __future__ import annotations

import numpy as np


def _fmt(x: float) -> str:
    return repr(float(x))


def write_obj(path, points: np.ndarray, nu: int, nv: int) -> None:
    """points: (nu*nv, 3), row-major over a (nu, nv) parameter grid.

    Quads are split into two counter-clockwise triangles; OBJ indices are
    1-based.  Newlines are '\n' regardless of platform.
    """
    lines = []
    for p in points:
        lines.append(f"v {_fmt(p[0])} {_fmt(p[1])} {_fmt(p[2])}")
    for i in range(nu - 1):
        for j in range(nv - 1):
            a = i * nv + j + 1
            b = a + 1
            c = a + nv
            d = c + 1
            lines.append(f"f {a} {b} {d}")
            lines.append(f"f {a} {d} {c}")
    with open(path, "w", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def grid_points(fn, us, vs) -> np.ndarray:
    pts = np.empty((len(us) * len(vs), 3))
    k = 0
    for u in us:
        for v in vs:
            pts[k] = fn(u, v)
            k += 1
    return pts
