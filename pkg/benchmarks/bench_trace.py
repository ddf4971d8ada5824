"""Compare the compiled ray kernel with the numpy fallback.

    python benchmarks/bench_trace.py [--rays N] [--repeat R]
"""

import argparse
import math
import statistics
import time

import numpy as np

from quasigeo import _kernels_py, kernels
from quasigeo.oracle import _geometry
from quasigeo.tetra import Tetrahedron

POINTED = [(0.0, 0.0, 0.3), (-1.0, 0.2, 0.0), (1.0, 0.3, 0.0), (0.1, -1.2, 0.0)]


def near_regular():
    R = 1.0 / math.sqrt(3.0)
    base = [(R * math.cos(t), R * math.sin(t), 0.0) for t in (0.0, 2 * math.pi / 3, 4 * math.pi / 3)]
    return Tetrahedron([(0.0, 0.0, 0.6155051981367545)] + base)


def timed(fn, repeat):
    out = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        out.append(time.perf_counter() - t0)
    return statistics.median(out)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rays", type=int, default=20000)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if kernels.BACKEND != "cython":
        print("compiled kernel not available; only the fallback runs")
    print(f"{'tetrahedron':<14}{'vertex':>7}{'rays':>8}{'numpy s':>10}{'cython s':>10}{'speedup':>9}")
    for name, tet in (("near-regular", near_regular()), ("pointed", Tetrahedron(POINTED))):
        for v in "ab":
            geom = _geometry(tet, v)
            phis = np.linspace(0, tet.theta(v), args.rays + 2)[1:-1]
            L = 10 * tet.longest_edge
            py = timed(lambda: _kernels_py.trace_batch(*geom, phis, L, 256), args.repeat)
            if kernels.BACKEND == "cython":
                cy = timed(lambda: kernels.trace_batch(*geom, phis, L, 256), args.repeat)
                ex = f"{cy:>10.4f}{py / cy:>8.1f}x"
            else:
                ex = f"{'-':>10}{'-':>9}"
            print(f"{name:<14}{v:>7}{args.rays:>8}{py:>10.4f}{ex}")


if __name__ == "__main__":
    main()
