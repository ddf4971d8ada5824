import json
import os
import subprocess
import sys

import numpy as np
import pytest

from fixtures import near_regular, pointed_one_q1
from quasigeo import _kernels_py, kernels
from quasigeo.oracle import _geometry

SNIPPET = """
import json, sys
sys.path.insert(0, {tests!r})
from fixtures import pointed_one_q1
from quasigeo import kernels
from quasigeo.oracle import sweep_loops
r = sweep_loops(pointed_one_q1(), "b")
print(json.dumps({{"backend": kernels.BACKEND, "q1": [str(lp.curve) for lp in r.q1],
                  "loops": [round(lp.angle, 12) for lp in r.loops]}}))
"""


def _run(pure):
    env = dict(os.environ)
    env.pop("QUASIGEO_PURE_PYTHON", None)
    if pure:
        env["QUASIGEO_PURE_PYTHON"] = "1"
    code = SNIPPET.format(tests=os.path.dirname(__file__))
    p = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return json.loads(p.stdout)


def test_env_forces_fallback():
    assert _run(True)["backend"] == "python"


def test_sweep_same_on_both_backends():
    if kernels.BACKEND != "cython":
        pytest.skip("compiled kernel not built")
    a, b = _run(False), _run(True)
    assert a["backend"] == "cython"
    assert a["q1"] == b["q1"] and a["loops"] == b["loops"]


@pytest.mark.parametrize("tet,v", [(near_regular(), "a"), (near_regular(), "b"), (pointed_one_q1(), "a")])
def test_dense_batch_identical(tet, v):
    if kernels.BACKEND != "cython":
        pytest.skip("compiled kernel not built")
    geom = _geometry(tet, v)
    phis = np.linspace(0, tet.theta(v), 5001)[1:-1]
    a = kernels.trace_batch(*geom, phis, 6 * tet.longest_edge, 128)
    b = _kernels_py.trace_batch(*geom, phis, 6 * tet.longest_edge, 128)
    for x, y in zip(a, b):
        assert np.array_equal(x, y)
