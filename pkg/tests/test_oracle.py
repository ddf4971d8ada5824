import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fixtures import CASE_1, CASE_2_1, CASE_2_2_2, CASE_2_2_3, isosceles, near_regular, pointed_one_q1, regular
from quasigeo import _kernels_py, kernels
from quasigeo import planar as pl
from quasigeo.construct import construct_q1, enumerate_all
from quasigeo.curves import (
    GEODESIC, EdgeCrossing, FaceInterior, VertexAnchor, crossing_distance, curves_equal, fan_angle,
    locate, verify,
)
from quasigeo.errors import DegenerateDirection, InputError
from quasigeo.oracle import _frame_rotation, _geometry, sweep_loops, trace, verified_q1
from quasigeo.tetra import Tetrahedron
from quasigeo.unfolding import face_frame


def test_square_geodesic_on_regular():
    t = regular()
    res = trace(t, EdgeCrossing("a", "c", 0.5), math.radians(60), 10)
    assert res.termination == "closed"
    assert res.length == pytest.approx(2.0)
    assert len(res.path) == 4
    assert verify(t, res.curve()).verdict == GEODESIC


def test_perpendicular_from_edge_midpoint_hits_vertex():
    res = trace(regular(), EdgeCrossing("a", "b", 0.5), math.radians(90), 10)
    assert res.termination == "vertex" and res.vertex in "cd"
    assert res.length == pytest.approx(math.sqrt(3) / 2)


def test_zero_length_is_empty():
    res = trace(regular(), VertexAnchor("a"), 0.3, 0.0)
    assert res.path == () and res.length == 0.0


def test_direction_along_edge_rejected():
    t = regular()
    with pytest.raises(DegenerateDirection):
        trace(t, VertexAnchor("a"), 0.0, 1.0)
    with pytest.raises(DegenerateDirection):
        trace(t, EdgeCrossing("a", "b", 0.5), math.pi, 1.0)


@pytest.mark.parametrize("pts", [CASE_1, CASE_2_1, CASE_2_2_2, CASE_2_2_3])
def test_trace_replays_q1(pts):
    t = Tetrahedron(pts)
    curve, _ = construct_q1(t)
    v = curve.points[0]
    phi = fan_angle(t, v, curve.points[1], curve.faces[0])
    res = trace(t, v, phi, 20 * t.longest_edge)
    assert res.termination == "vertex" and res.vertex == v.label
    assert crossing_distance(res.curve(), curve) <= 1e-6


def _developed_distance(t, start, res):
    F0 = res.faces[0]
    S = locate(t, F0, start, face_frame(t, F0))
    return pl.dist(S, res.state.point)


@settings(max_examples=60, deadline=None)
@given(st.floats(0.05, 0.9), st.floats(0.05, 0.9), st.floats(0, 2 * math.pi), st.floats(0.5, 8))
def test_trace_length_preserving_and_reversible(u, w, phi, length):
    if u + w >= 0.95:
        return
    t = Tetrahedron(CASE_2_2_2)
    start = FaceInterior("D", (u, w, 1 - u - w))
    try:
        res = trace(t, start, phi, length)
    except DegenerateDirection:
        return
    if res.termination != "max_length":
        return
    assert _developed_distance(t, start, res) == pytest.approx(res.length, rel=1e-9)
    end = res.path[-1]
    F = res.faces[-1]
    d = res.state.direction
    back = math.atan2(-d[1], -d[0]) - _frame_rotation(t, F, res.state.frame)
    rev = trace(t, end, back, length)
    fwd_edges = [p for p in res.path[1:-1]]
    rev_edges = [p for p in rev.path[1:-1]]
    assert [p.edge for p in rev_edges] == [p.edge for p in fwd_edges[::-1]]
    for p, q in zip(rev_edges, fwd_edges[::-1]):
        assert p.t == pytest.approx(q.t, abs=1e-7)


def test_sweep_isosceles_has_no_q1():
    t = isosceles()
    res = {v: sweep_loops(t, v) for v in "abcd"}
    assert verified_q1(res) == []
    for r in res.values():
        assert all(not lp.is_q1 for lp in r.loops)


def test_sweep_near_regular():
    t = near_regular()
    res = {v: sweep_loops(t, v) for v in "abcd"}
    q1 = verified_q1(res)
    # six short star-unfolding loops plus six longer ones around a single vertex
    assert len(q1) == 12
    assert sorted(lp.curve.anchors[0] for lp in q1) == sorted("bbbbccccdddd")
    apex = [lp for lp in res["a"].loops if lp.report.k == 1]
    assert len(apex) >= 3 and not any(lp.is_q1 for lp in apex)
    lengths = sorted(round(lp.length, 4) for lp in q1)
    assert len(set(lengths)) == 2


def test_sweep_stable_under_resolution_halving():
    t = near_regular()
    a = verified_q1({v: sweep_loops(t, v, 1e-4) for v in "abcd"})
    b = verified_q1({v: sweep_loops(t, v, 5e-5) for v in "abcd"})
    assert len(a) == len(b)
    for lp in a:
        assert any(curves_equal(lp.curve, o.curve) for o in b)


def test_sweep_pointed_from_b():
    t = pointed_one_q1()
    r = sweep_loops(t, "b")
    assert len(r.q1) == 1
    c, _ = construct_q1(t)
    assert crossing_distance(r.q1[0].curve, c) <= 1e-6
    assert "verdict" in r.table().splitlines()[0]


def test_sweep_rejects_bad_resolution():
    with pytest.raises(ValueError):
        sweep_loops(regular(), "a", 0.0)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.tuples(st.floats(-3, 3), st.floats(-3, 3), st.floats(-3, 3)), min_size=4, max_size=4),
       st.sampled_from("abcd"), st.integers(0, 2**31))
def test_backends_agree(pts, v, seed):
    try:
        t = Tetrahedron(pts)
    except InputError:
        return
    if kernels.BACKEND != "cython":
        pytest.skip("compiled kernel not built")
    geom = _geometry(t, v)
    phis = np.sort(np.random.default_rng(seed).uniform(0, t.theta(v), 300))
    a = kernels.trace_batch(*geom, phis, 10 * t.longest_edge, 256)
    b = _kernels_py.trace_batch(*geom, phis, 10 * t.longest_edge, 256)
    for x, y in zip(a, b):
        assert np.array_equal(x, y)


def _vertex_pieces(curve):
    """Vertex-to-vertex pieces of a curve as (start, points, faces)."""
    n = len(curve.points)
    idx = [i for i, p in enumerate(curve.points) if isinstance(p, VertexAnchor)]
    for j, i in enumerate(idx):
        k = idx[(j + 1) % len(idx)]
        span = (k - i) % n or n
        pts = [curve.points[(i + s) % n] for s in range(span + 1)]
        faces = [curve.faces[(i + s) % n] for s in range(span)]
        yield pts, faces


@pytest.mark.parametrize("make", [near_regular, pointed_one_q1, lambda: Tetrahedron(CASE_2_2_2)])
def test_enumerated_curves_reachable_by_tracer(make):
    t = make()
    checked = 0
    for kind, curve in enumerate_all(t).all_curves():
        for pts, faces in _vertex_pieces(curve):
            if len(pts) == 2:
                continue  # along an edge
            phi = fan_angle(t, pts[0], pts[1], faces[0])
            res = trace(t, pts[0], phi, 20 * t.longest_edge)
            assert res.termination == "vertex" and res.vertex == pts[-1].label, kind
            got = res.path[1:-1]
            assert [p.edge for p in got] == [p.edge for p in pts[1:-1]]
            assert max(abs(p.t - q.t) for p, q in zip(got, pts[1:-1])) <= 1e-6
            checked += 1
    assert checked > 0
