import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fixtures import CASE_1, isosceles, near_regular, one_q3, pointed_one_q1, regular
from quasigeo.construct import construct_q1, loop_at
from quasigeo.curves import (
    GEODESIC, NOT_QUASIGEODESIC, QUASIGEODESIC, ClosedSurfaceCurve, EdgeCrossing, FaceInterior,
    VertexAnchor, count_vertices, curves_equal, doubled_edge, edge_point, face_boundary,
    format_curve, gauss_bonnet_residual, is_simple, lift, parse_curve, side_angles, verify,
)
from quasigeo.errors import AnchorNotOnCurve, InputError, MalformedCurve, NonSimpleCurve
from quasigeo.tetra import PI, VERTICES, Tetrahedron, Tolerance

deg = math.degrees
SQUARE = "ac:0.5 (D) bc:0.5 (A) bd:0.5 (C) ad:0.5 (B)"


def test_edge_point_normalization():
    p = edge_point("c", "a", 0.25)
    assert p == EdgeCrossing("a", "c", 0.75)
    assert edge_point("a", "b", 1e-12) == VertexAnchor("a")
    assert edge_point("a", "b", 1 - 1e-12) == VertexAnchor("b")
    with pytest.raises(MalformedCurve):
        FaceInterior("A", (0.5, 0.6, -0.1))


def test_curve_validation():
    with pytest.raises(MalformedCurve):
        ClosedSurfaceCurve([VertexAnchor("a")], ["B"])
    with pytest.raises(MalformedCurve):
        ClosedSurfaceCurve([VertexAnchor("a"), VertexAnchor("b")], ["A", "C"])
    with pytest.raises(MalformedCurve):
        parse_curve("a (D) bc:0.25 (Q)")


def test_format_parse_roundtrip():
    c = parse_curve("a (D) bc:0.25 (A) cd:0.5 (B)")
    assert format_curve(parse_curve(format_curve(c))) == format_curve(c)
    f = parse_curve("D[0.2,0.3,0.5] (D) ab:0.5 (D)")
    assert isinstance(f.points[0], FaceInterior)


def test_doubled_edge_regular():
    t = regular()
    c = doubled_edge("a", "b")
    assert c.is_doubled_edge
    l, r = side_angles(t, c, "a")
    assert (deg(l), deg(r)) == pytest.approx((0, 180))
    rep = verify(t, c)
    assert rep.verdict == QUASIGEODESIC and rep.k == 2 and rep.degenerate
    assert count_vertices(c) == 2


def test_face_boundary_regular():
    t = regular()
    c = face_boundary(t, "D")
    l, r = side_angles(t, c, "b")
    assert sorted((deg(l), deg(r))) == pytest.approx([60, 120])
    rep = verify(t, c)
    assert rep.verdict == QUASIGEODESIC and rep.k == 3 and count_vertices(c) == 3
    sides = {len(rep.left_vertices): rep.turn_left, len(rep.right_vertices): rep.turn_right}
    # one side holds only the face, the other the opposite vertex
    assert sides[1] == pytest.approx(PI) and sides[0] == pytest.approx(2 * PI)
    assert max(gauss_bonnet_residual(t, c)) < 1e-12
    with pytest.raises(AnchorNotOnCurve):
        side_angles(t, c, "d")


def test_face_boundaries_one_q3():
    t = one_q3()
    assert verify(t, face_boundary(t, "C")).verdict == QUASIGEODESIC
    rep = verify(t, face_boundary(t, "B"))
    assert rep.verdict == NOT_QUASIGEODESIC
    assert deg(max(rep.angles["c"])) == pytest.approx(188.05, abs=0.01)


def test_near_regular_loops():
    t = near_regular()
    apex = loop_at(t, "a", "b")
    rep = verify(t, apex)
    assert rep.verdict == NOT_QUASIGEODESIC and rep.k == 1
    small, big = sorted(rep.angles["a"])
    # rounded to whole degrees these are 12 and 206
    assert deg(small) == pytest.approx(12.67, abs=0.01)
    assert deg(big) == pytest.approx(205.33, abs=0.01)
    assert loop_at(t, "b", "a") is None
    base = verify(t, loop_at(t, "b", "c"))
    assert base.verdict == QUASIGEODESIC
    assert sorted(deg(x) for x in base.angles["b"]) == pytest.approx([12.67, 154.67], abs=0.01)


def test_closed_geodesic_isosceles():
    for t in (regular(), isosceles()):
        c = parse_curve(SQUARE)
        rep = verify(t, c)
        assert rep.verdict == GEODESIC and rep.k == 0
        assert rep.turn_left == pytest.approx(0, abs=1e-9)
        assert max(rep.gauss_bonnet_residuals()) <= 1e-12
        assert sorted(rep.left_vertices + rep.right_vertices) == list(VERTICES)


def test_non_simple_and_kinked():
    t = one_q3()
    # crossing an edge and bouncing back is not straight
    c = parse_curve("a (D) bc:0.5 (D)")
    assert verify(t, c).verdict == NOT_QUASIGEODESIC
    # repeated anchor
    c = parse_curve("a (D) b (D) c (B) a (C) b (A) c (D)")
    assert not is_simple(t, c)
    with pytest.raises(NonSimpleCurve):
        gauss_bonnet_residual(t, c)


def test_q1_counts_one_vertex():
    t = Tetrahedron(CASE_1)
    c, _ = construct_q1(t)
    assert count_vertices(c) == 1 and len(c.points) >= 3


def test_lift_on_segment():
    t = one_q3()
    p = lift(t, EdgeCrossing("a", "b", 0.25))
    a, b = t.point("a"), t.point("b")
    assert p == pytest.approx(tuple(a[i] + 0.25 * (b[i] - a[i]) for i in range(3)))


def _sample_curves():
    out = []
    for t in (one_q3(), pointed_one_q1(), near_regular(), Tetrahedron(CASE_1)):
        c, _ = construct_q1(t)
        out.append((t, c))
        out.append((t, face_boundary(t, "C")))
    out.append((regular(), parse_curve(SQUARE)))
    return out


@pytest.mark.parametrize("i", range(9))
def test_left_plus_right_is_theta(i):
    t, c = _sample_curves()[i]
    for v in c.anchors:
        l, r = side_angles(t, c, v)
        assert l + r == pytest.approx(t.theta(v), abs=1e-9)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 8), st.integers(0, 20), st.booleans())
def test_verify_rotation_reversal_invariance(i, k, rev):
    t, c = _sample_curves()[i]
    base = verify(t, c)
    d = c.rotated(k)
    if rev:
        d = d.reversed()
    rep = verify(t, d)
    assert rep.verdict == base.verdict and rep.k == base.k and rep.simple == base.simple
    for v, (l, r) in base.angles.items():
        got = rep.angles[v]
        want = (r, l) if rev else (l, r)
        assert got == pytest.approx(want, abs=1e-9)
    assert curves_equal(c, d)


def test_tolerance_override():
    t = regular()
    assert verify(t, parse_curve(SQUARE), Tolerance(1e-3)).verdict == GEODESIC
    with pytest.raises(InputError):
        Tetrahedron([(0, 0, 0)] * 4)
