"""Benchmark: compiled jet kernels vs the NumPy fallback.

Times the full curvature sweep (frames, delta, k on a theta grid) and the
raw kernels.  Run directly; the fallback is forced in a subprocess via
CROSSCAP_JETS=python.
"""
import os
import subprocess
import sys
import time

import numpy as np


def bench(label):
    from crosscap import jets
    from crosscap.circle_frame import CircleCurve, FrameChoice, sweep
    from crosscap.normal_form import NormalFormCoeffs

    c = NormalFormCoeffs.from_triple(-2, 0, 1)
    cc = CircleCurve(0.05, c)
    th = np.linspace(0.05, np.pi - 0.05, 720)

    sweep(cc, th, FrameChoice.NORMAL_TILDE)  # warm up
    t0 = time.perf_counter()
    n = 0
    while time.perf_counter() - t0 < 2.0:
        sweep(cc, th, FrameChoice.FLIPPED_BINORMAL)
        n += 1
    per_sweep = (time.perf_counter() - t0) / n * 1e3

    rng = np.random.default_rng(0)
    a = np.ascontiguousarray(rng.standard_normal((7, 720)))
    b = np.ascontiguousarray(np.abs(rng.standard_normal((7, 720))) + 0.5)
    t0 = time.perf_counter()
    reps = 2000
    for _ in range(reps):
        jets.jmul(a, b)
    per_mul = (time.perf_counter() - t0) / reps * 1e6

    print(f"{jets.backend_name():>7}: curvature sweep (720 pts) {per_sweep:8.2f} ms"
          f"   jet_mul (7x720) {per_mul:8.1f} us", flush=True)


if __name__ == "__main__":
    if os.environ.get("CROSSCAP_JETS"):
        bench(os.environ["CROSSCAP_JETS"])
    else:
        bench("auto")
        env = dict(os.environ, CROSSCAP_JETS="python")
        subprocess.run([sys.executable, __file__], env=env, check=True)
