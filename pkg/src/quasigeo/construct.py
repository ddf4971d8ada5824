"""Constructions of simple closed quasigeodesics through 1, 2, 3 and 4
vertices, and a bounded enumeration of all of them.

Every curve handed out by a constructor has been checked with
:func:`quasigeo.curves.verify`.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from typing import Any

from . import planar as pl
from .curves import (
    NOT_QUASIGEODESIC, ClosedSurfaceCurve, EdgeCrossing, VertexAnchor, curves_equal, doubled_edge,
    edge_point, format_curve, verify,
)
from .errors import InternalContradiction, QuasigeoError, VertexNotOnFace
from .tetra import (
    DEFAULT_TOL, FACES, PI, VERTICES, AngleTable, Tetrahedron, Tolerance, _as_angles, classify,
    edge_faces, face_vertices, other_vertices, vertex_faces,
)
from .unfolding import StarUnfolding, attach, star_unfold, visible_pairs

PARTITIONS = ("AB|CD", "AC|BD", "AD|BC")
CASES = ("Case 1", "Case 2.1", "Case 2.2.1", "Case 2.2.2", "Case 2.2.3",
         "degenerate-Q2", "edge-loop", "face-scan", "partition")


class NoQ1Isosceles(QuasigeoError):
    """Isosceles tetrahedra carry no 1-vertex quasigeodesic.  Raised as an
    expected outcome of :func:`construct_q1`, not a failure."""


@dataclass
class ConstructionTrace:
    """How a construction reached its curve.

    ``choices`` holds every selection made (closest vertices, candidate
    values) so that the run can be replayed.
    """

    case: str
    choices: dict[str, Any] = field(default_factory=dict)
    unfolding: StarUnfolding | None = None

    def __post_init__(self):
        if self.case not in CASES:
            raise ValueError(f"unknown case label {self.case!r}")

    def as_record(self) -> dict[str, Any]:
        return {"case": self.case, "choices": {k: _plain(v) for k, v in self.choices.items()},
                "unfolding_source": self.unfolding.source if self.unfolding else None}

    def as_text(self) -> str:
        lines = [f"case: {self.case}"]
        for k, v in self.choices.items():
            lines.append(f"  {k}: {_plain(v)}")
        if self.unfolding is not None:
            lines.append(f"  star unfolding from {self.unfolding.source}")
        return "\n".join(lines)


def _plain(v):
    if isinstance(v, float):
        return round(v, 12)
    if isinstance(v, ClosedSurfaceCurve):
        return format_curve(v)
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    return v


def _check(tet: Tetrahedron, curve: ClosedSurfaceCurve, k: int, what: str):
    rep = verify(tet, curve)
    if not rep.is_quasigeodesic or rep.k != k:
        raise InternalContradiction(f"{what} failed verification: {format_curve(curve)}")
    return rep


def _closest(tet: Tetrahedron, v: str, prefs) -> str:
    """First of ``prefs`` whose distance to ``v`` is minimal within tolerance."""
    slack = tet.tol.eps * tet.longest_edge
    best = min(tet.length(v, x) for x in prefs)
    return next(x for x in prefs if tet.length(v, x) <= best + slack)


def _rank(values: dict[str, float], tol: Tolerance) -> list[str]:
    """Labels by decreasing value; values within ``tol`` tie on label order."""
    def cmp(x, y):
        if abs(values[x] - values[y]) <= tol.eps:
            return -1 if x < y else 1
        return -1 if values[x] > values[y] else 1
    return sorted(values, key=functools.cmp_to_key(cmp))


# ---------------------------------------------------------------------------
# geodesic loops in star unfoldings
# ---------------------------------------------------------------------------

def loop_at(tet: Tetrahedron, v: str, z: str, su: StarUnfolding | None = None):
    """The geodesic loop at ``v`` winding around ``z``.

    It is the segment joining the two images of ``v`` in the star unfolding
    from ``v`` that lie in the faces incident to ``z``.  Returns ``None``
    when that segment leaves the unfolding or runs through a vertex.
    """
    if v == z:
        raise ValueError("loop vertex and enclosed vertex must differ")
    su = su or star_unfold(tet, v)
    x, y = sorted(other_vertices(v, z))
    P, Q = su.images[x], su.images[y]
    walked = su.walk(P, Q, x.upper())
    if walked is None:
        return None
    crossings, end = walked
    if end != y.upper() or not crossings:
        return None
    pts = [VertexAnchor(v)]
    faces = [x.upper()]
    cur = x.upper()
    for (p, q, t) in crossings:
        pts.append(edge_point(p, q, t, Tolerance(0.0)))
        cur = _across(cur, p, q)
        faces.append(cur)
    if any(isinstance(p, VertexAnchor) for p in pts[1:]):
        return None
    return ClosedSurfaceCurve(pts, faces, label=f"loop {v} around {z}")


def _across(face: str, p: str, q: str) -> str:
    F, G = edge_faces(p, q)
    return G if F == face else F


def region_side_angle(tet: Tetrahedron, v: str, z: str) -> float:
    """Angle at ``v`` on the side of the loop at ``v`` away from ``z``."""
    return tet.theta(v) - (tet.curvature(z) - PI)


# ---------------------------------------------------------------------------
# Q1
# ---------------------------------------------------------------------------

def construct_q1(tet: Tetrahedron):
    """A 1-vertex simple closed quasigeodesic found by the curvature case
    analysis.

    Returns
    -------
    (curve, ConstructionTrace)

    Raises
    ------
    NoQ1Isosceles
        For isosceles input.
    InternalContradiction
        If the selected loop fails verification.
    """
    tol = tet.tol
    cls = classify(tet)
    if cls.is_isosceles:
        raise NoQ1Isosceles("isosceles tetrahedra have no 1-vertex quasigeodesic")
    om = cls.curvatures
    order = _rank(om, tol)
    a, b = order[0], order[1]
    if om[b] < PI - tol.eps:
        # exactly one vertex of curvature above pi
        d = _closest(tet, a, sorted(other_vertices(a)))
        curve = loop_at(tet, d, a)
        trace = ConstructionTrace("Case 1", {"a": a, "closest_to_a": d}, star_unfold(tet, d))
        return _finish(tet, curve, trace)
    rest = sorted(other_vertices(a, b))
    if _closest(tet, a, [b] + rest) == b:
        curve = loop_at(tet, b, a)
        trace = ConstructionTrace("Case 2.1", {"a": a, "b": b, "closest_to_a": b}, star_unfold(tet, b))
        return _finish(tet, curve, trace)
    c = _closest(tet, a, rest)
    d = next(x for x in rest if x != c)
    w = _closest(tet, b, [a] + rest)
    base = {"a": a, "b": b, "closest_to_a": c, "closest_to_b": w}
    if w == a:
        curve = loop_at(tet, a, b)
        return _finish(tet, curve, ConstructionTrace("Case 2.2.1", base, star_unfold(tet, a)))
    if w == d:
        qc, qd = (c, a), (d, b)
        case = "Case 2.2.2"
    else:
        if loop_at(tet, d, a) is not None:
            qc, qd = (c, b), (d, a)
            base["d_loop_around"] = a
        else:
            qc, qd = (c, a), (d, b)
            base["d_loop_around"] = b
        case = "Case 2.2.3"
    vc = region_side_angle(tet, *qc)
    vd = region_side_angle(tet, *qd)
    base.update({"c_loop": qc, "d_loop": qd, "c_region_angle": vc, "d_region_angle": vd})
    chosen = qc if vc <= PI + tol.eps else qd
    base["chosen"] = chosen
    curve = loop_at(tet, *chosen)
    return _finish(tet, curve, ConstructionTrace(case, base, star_unfold(tet, chosen[0])))


def _finish(tet, curve, trace):
    if curve is None:
        raise InternalContradiction(f"{trace.case}: selected loop leaves the unfolding")
    _check(tet, curve, 1, trace.case)
    return curve, trace


# ---------------------------------------------------------------------------
# Q2
# ---------------------------------------------------------------------------

def edge_loop(tet: Tetrahedron, a: str, x: str, su: StarUnfolding | None = None):
    """Edge ``xa`` closed by the segment from the image ``a_x`` to ``x`` in
    the star unfolding from ``a``; ``None`` if the segment is blocked."""
    su = su or star_unfold(tet, a)
    walked = su.walk(su.images[x], su.base_point(x), x.upper())
    if walked is None:
        return None
    crossings, end = walked
    pts = [VertexAnchor(a)]
    faces = [x.upper()]
    cur = x.upper()
    for (p, q, t) in crossings:
        pts.append(edge_point(p, q, t, Tolerance(0.0)))
        cur = _across(cur, p, q)
        faces.append(cur)
    if x not in face_vertices(cur):
        return None
    pts.append(VertexAnchor(x))
    faces.append(edge_faces(x, a)[0])
    return ClosedSurfaceCurve(pts, faces, label=f"edge-loop {a}{x}")


def construct_q2(tet: Tetrahedron):
    """A 2-vertex simple closed quasigeodesic.

    With two or more vertices of curvature at least pi this is the doubled
    edge between the two of highest curvature; otherwise the tetrahedron is
    pointed and the edge-loop of the first visible image pair is used.
    """
    tol = tet.tol
    om = {v: tet.curvature(v) for v in VERTICES}
    high = [v for v in VERTICES if om[v] >= PI - tol.eps]
    if len(high) >= 2:
        u, w = sorted(_rank(om, tol)[:2])
        curve = doubled_edge(u, w)
        trace = ConstructionTrace("degenerate-Q2", {"edge": u + w})
        _check(tet, curve, 2, trace.case)
        return curve, trace
    a = high[0]
    su = star_unfold(tet, a)
    pairs = visible_pairs(su)
    if not pairs:
        raise InternalContradiction(f"pointed at {a} but no image sees its vertex")
    img, x = pairs[0]
    curve = edge_loop(tet, a, x, su)
    trace = ConstructionTrace("edge-loop", {"pointed_at": a, "visible_pair": [img, x],
                                            "visible_pairs": [list(p) for p in pairs]}, su)
    if curve is None:
        raise InternalContradiction(f"visible segment {img}{x} could not be walked")
    _check(tet, curve, 2, trace.case)
    return curve, trace


# ---------------------------------------------------------------------------
# Q3 and Q4 (also usable on bare angle tables)
# ---------------------------------------------------------------------------

def face_fails_at(tet: Tetrahedron | AngleTable, F: str, v: str, tol: Tolerance | None = None) -> bool:
    """Whether the two angles at ``v`` off face ``F`` sum to more than pi."""
    if v not in face_vertices(F):
        raise VertexNotOnFace(f"vertex {v} is not on face {F}")
    tol = tol or getattr(tet, "tol", DEFAULT_TOL)
    table = _as_angles(tet)
    s = sum(table[v + G] for G in vertex_faces(v) if G != F)
    return s > PI + tol.eps


def failing_faces(tet: Tetrahedron | AngleTable, tol: Tolerance | None = None) -> dict[str, list[str]]:
    """Vertices at which each face fails."""
    return {F: [v for v in face_vertices(F) if face_fails_at(tet, F, v, tol)] for F in FACES}


def _boundary_curve(tet, F: str) -> ClosedSurfaceCurve:
    if isinstance(tet, Tetrahedron):
        cyc = tet.cycle(F)
        i = cyc.index(min(cyc))
        cyc = cyc[i:] + cyc[:i]
    else:
        cyc = face_vertices(F)
    return ClosedSurfaceCurve([VertexAnchor(v) for v in cyc], [F] * 3, label=f"boundary {F}")


def construct_q3(tet: Tetrahedron | AngleTable, tol: Tolerance | None = None):
    """First face (in label order) failing at none of its vertices, and its
    boundary curve."""
    fails = failing_faces(tet, tol)
    for F in FACES:
        if not fails[F]:
            curve = _boundary_curve(tet, F)
            if isinstance(tet, Tetrahedron):
                _check(tet, curve, 3, "face-scan")
            return F, curve
    raise InternalContradiction("every face fails at some vertex")


def partition_cycle(partition: str) -> str:
    """Vertex cycle ``x z y w`` bounding faces ``X, Y`` of ``XY|ZW``."""
    if partition not in PARTITIONS:
        raise ValueError(f"partition must be one of {PARTITIONS}")
    X, Y, _, Z, W = partition
    x, y, z, w = X.lower(), Y.lower(), Z.lower(), W.lower()
    return x + z + y + w


def q4_side_sums(tet: Tetrahedron | AngleTable, partition: str) -> dict[str, tuple[float, float]]:
    """Per vertex of the cycle: (angle sum on the side of the first face
    pair, angle sum on the other side)."""
    table = _as_angles(tet)
    pair = set(partition[:2])
    out = {}
    for v in partition_cycle(partition):
        inside = outside = 0.0
        for G in vertex_faces(v):
            if G in pair:
                inside += table[v + G]
            else:
                outside += table[v + G]
        out[v] = (inside, outside)
    return out


def construct_q4(tet: Tetrahedron | AngleTable, partition: str, tol: Tolerance | None = None):
    """The 4-edge cycle separating the face pairs of ``partition`` if it is a
    quasigeodesic, else :data:`NOT_QUASIGEODESIC`."""
    tol = tol or getattr(tet, "tol", DEFAULT_TOL)
    sums = q4_side_sums(tet, partition)
    if any(max(s) > PI + tol.eps for s in sums.values()):
        return NOT_QUASIGEODESIC
    cyc = partition_cycle(partition)
    faces = [edge_faces(cyc[i], cyc[(i + 1) % 4])[0] for i in range(4)]
    curve = ClosedSurfaceCurve([VertexAnchor(v) for v in cyc], faces, label=f"partition {partition}")
    if isinstance(tet, Tetrahedron):
        _check(tet, curve, 4, "partition")
    return curve


# ---------------------------------------------------------------------------
# vertex-to-vertex geodesics by exact window propagation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VertexGeodesic:
    """Straight segment from ``source`` to ``target`` avoiding vertices."""

    source: str
    target: str
    faces: tuple[str, ...]
    crossings: tuple[EdgeCrossing, ...]
    length: float

    def closed_with_edge(self) -> ClosedSurfaceCurve:
        pts = [VertexAnchor(self.source), *self.crossings, VertexAnchor(self.target)]
        faces = list(self.faces) + [edge_faces(self.source, self.target)[0]]
        return ClosedSurfaceCurve(pts, faces, label=f"edge-loop {self.source}{self.target}")

    def as_loop(self) -> ClosedSurfaceCurve:
        pts = [VertexAnchor(self.source), *self.crossings]
        return ClosedSurfaceCurve(pts, list(self.faces), label=f"loop {self.source}")


def vertex_geodesics(tet: Tetrahedron, u: str, depth_bound: int = 8) -> list[VertexGeodesic]:
    """All geodesic segments leaving ``u`` that reach a vertex after crossing
    at most ``depth_bound - 1`` edges (edges themselves excluded).

    The directions at ``u`` are swept exactly: each window of directions is
    carried through the face sequence it crosses and split wherever a newly
    unfolded vertex falls strictly inside it.
    """
    eps = tet.tol.eps
    out = []
    ORIGIN = (0.0, 0.0)
    for F, x, y, _, ang in tet.fan(u):
        X = (tet.length(u, x), 0.0)
        Y = pl.place_apex(ORIGIN, X, ang, tet.length(u, y), left=True)
        # window: (cw ray, ccw ray, entry edge labels/images, faces, entry edges so far)
        stack = [(X, Y, (x, X), (y, Y), (F,), ((x, X, y, Y),))]
        while stack:
            Dcw, Dccw, (p, P), (q, Q), faces, edges = stack.pop()
            if len(faces) >= depth_bound:
                continue
            G = _across(faces[-1], p, q)
            s = next(v for v in face_vertices(G) if v not in (p, q))
            S = attach(tet, {p: P, q: Q}, G)[s]
            nf = faces + (G,)
            a_cw = pl.angle_between(Dcw, S)
            a_ccw = pl.angle_between(S, Dccw)
            if a_cw > eps and a_ccw > eps:
                out.append(_vertex_geodesic(u, s, S, nf, edges))
                stack.append((S, Dccw, (s, S), (q, Q), nf, edges + ((s, S, q, Q),)))
                stack.append((Dcw, S, (p, P), (s, S), nf, edges + ((p, P, s, S),)))
            elif a_cw <= eps:
                stack.append((Dcw, Dccw, (s, S), (q, Q), nf, edges + ((s, S, q, Q),)))
            else:
                stack.append((Dcw, Dccw, (p, P), (s, S), nf, edges + ((p, P, s, S),)))
    return out


def _vertex_geodesic(u, s, S, faces, edges) -> VertexGeodesic:
    crossings = []
    for p, P, q, Q in edges:
        hit = pl.seg_intersection((0.0, 0.0), S, P, Q)
        pt = edge_point(p, q, hit[1], Tolerance(0.0))
        crossings.append(pt)
    return VertexGeodesic(u, s, tuple(faces), tuple(crossings), pl.norm(S))


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

@dataclass
class EnumerationResult:
    q1: list[ClosedSurfaceCurve] = field(default_factory=list)
    q2_nondegenerate: list[ClosedSurfaceCurve] = field(default_factory=list)
    q2_degenerate: list[ClosedSurfaceCurve] = field(default_factory=list)
    q3: list[ClosedSurfaceCurve] = field(default_factory=list)
    q4: list[ClosedSurfaceCurve] = field(default_factory=list)
    depth_bound: int = 8

    @property
    def q2(self) -> list[ClosedSurfaceCurve]:
        return self.q2_nondegenerate + self.q2_degenerate

    @property
    def total(self) -> int:
        return len(self.q1) + len(self.q2) + len(self.q3) + len(self.q4)

    def counts(self) -> dict[str, int]:
        return {"q1": len(self.q1), "q2_nondegenerate": len(self.q2_nondegenerate),
                "q2_degenerate": len(self.q2_degenerate), "q3": len(self.q3),
                "q4": len(self.q4), "total": self.total}

    def all_curves(self) -> list[tuple[str, ClosedSurfaceCurve]]:
        out = [("Q1", c) for c in self.q1]
        out += [("Q2", c) for c in self.q2_nondegenerate]
        out += [("Q2-degenerate", c) for c in self.q2_degenerate]
        out += [("Q3", c) for c in self.q3]
        out += [("Q4", c) for c in self.q4]
        return out


def _add_unique(bucket: list, curve: ClosedSurfaceCurve, tol: float = 1e-6) -> None:
    if not any(curves_equal(curve, c, tol) for c in bucket):
        bucket.append(curve)


def enumerate_all(tet: Tetrahedron, depth_bound: int = 8) -> EnumerationResult:
    """Every simple closed quasigeodesic of the searched shapes.

    Q1: the twelve image-pair loops of the four star unfoldings.  Q2:
    doubled edges plus edge-loops closed by vertex-to-vertex geodesics of
    at most ``depth_bound`` faces.  Q3: face boundaries.  Q4: partition
    cycles.  Only curves passing verification are kept.
    """
    res = EnumerationResult(depth_bound=depth_bound)
    for v in VERTICES:
        su = star_unfold(tet, v)
        for z in other_vertices(v):
            curve = loop_at(tet, v, z, su)
            if curve is None:
                continue
            rep = verify(tet, curve)
            if rep.is_quasigeodesic and rep.k == 1:
                _add_unique(res.q1, curve)
    for u in VERTICES:
        for g in vertex_geodesics(tet, u, depth_bound):
            if g.target == u:
                continue
            curve = g.closed_with_edge()
            rep = verify(tet, curve)
            if rep.is_quasigeodesic and rep.k == 2:
                _add_unique(res.q2_nondegenerate, curve)
    for u, w in (("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")):
        if tet.theta(u) <= PI + tet.tol.eps and tet.theta(w) <= PI + tet.tol.eps:
            res.q2_degenerate.append(doubled_edge(u, w))
    fails = failing_faces(tet)
    for F in FACES:
        if not fails[F]:
            curve = _boundary_curve(tet, F)
            if verify(tet, curve).is_quasigeodesic:
                res.q3.append(curve)
    for part in PARTITIONS:
        curve = construct_q4(tet, part)
        if curve is not NOT_QUASIGEODESIC:
            res.q4.append(curve)
    return res


__all__ = [
    "NoQ1Isosceles", "ConstructionTrace", "EnumerationResult", "VertexGeodesic", "PARTITIONS",
    "construct_q1", "construct_q2", "construct_q3", "construct_q4", "enumerate_all",
    "face_fails_at", "failing_faces", "loop_at", "edge_loop", "vertex_geodesics",
    "partition_cycle", "q4_side_sums", "region_side_angle",
]
