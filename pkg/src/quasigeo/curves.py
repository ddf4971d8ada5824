"""Intrinsic closed curves on a tetrahedron and their verification.

A curve is a cyclic list of surface points (vertex anchors, edge crossings,
face-interior points) together with, for each consecutive pair, the face
holding the straight segment between them.

Left and right follow the outward orientation: walking along the curve and
viewed from outside the solid, *left* is the counterclockwise side.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Sequence, Union

from . import planar as pl
from .errors import AnchorNotOnCurve, MalformedCurve, NonSimpleCurve
from .tetra import (
    DEFAULT_TOL, PI, TWO_PI, VERTICES, Tetrahedron, Tolerance, edge_faces, face_vertices,
    other_vertices,
)
from .unfolding import attach, face_frame


# ---------------------------------------------------------------------------
# surface points
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VertexAnchor:
    label: str

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class EdgeCrossing:
    """Point at parameter ``t`` along the edge ``u -> w`` (``u < w``)."""

    u: str
    w: str
    t: float

    @property
    def edge(self) -> str:
        return self.u + self.w

    def __str__(self) -> str:
        return f"{self.u}{self.w}:{self.t:.17g}"


@dataclass(frozen=True)
class FaceInterior:
    """Point inside ``face`` with barycentric weights on its vertices in
    label order."""

    face: str
    bary: tuple[float, float, float]

    def __post_init__(self):
        b = tuple(float(x) for x in self.bary)
        object.__setattr__(self, "bary", b)
        if self.face not in "ABCD" or len(self.face) != 1:
            raise MalformedCurve(f"bad face {self.face!r}")
        if len(b) != 3 or min(b) < -1e-9 or abs(sum(b) - 1.0) > 1e-9:
            raise MalformedCurve(f"barycentric weights {b} must be nonnegative and sum to 1")

    def __str__(self) -> str:
        return f"{self.face}[{','.join(f'{x:.17g}' for x in self.bary)}]"


SurfacePoint = Union[VertexAnchor, EdgeCrossing, FaceInterior]


def edge_point(u: str, w: str, t: float, tol: Tolerance = DEFAULT_TOL) -> SurfacePoint:
    """Normalized point on edge ``u -> w``; snaps to a vertex near the ends."""
    if u > w:
        u, w, t = w, u, 1.0 - t
    if t <= tol.eps:
        return VertexAnchor(u)
    if t >= 1.0 - tol.eps:
        return VertexAnchor(w)
    return EdgeCrossing(u, w, float(t))


def point_faces(p: SurfacePoint) -> tuple[str, ...]:
    if isinstance(p, VertexAnchor):
        return tuple(F for F in "ABCD" if F != p.label.upper())
    if isinstance(p, EdgeCrossing):
        return edge_faces(p.u, p.w)
    return (p.face,)


def locate(tet: Tetrahedron, face: str, p: SurfacePoint, placement=None) -> tuple[float, float]:
    """Planar position of ``p`` in a placement of ``face``."""
    place = placement if placement is not None else face_frame(tet, face)
    fv = face_vertices(face)
    if isinstance(p, VertexAnchor):
        if p.label not in fv:
            raise MalformedCurve(f"vertex {p.label} is not on face {face}")
        return place[p.label]
    if isinstance(p, EdgeCrossing):
        if p.u not in fv or p.w not in fv:
            raise MalformedCurve(f"edge {p.edge} is not on face {face}")
        return pl.lerp(place[p.u], place[p.w], p.t)
    if p.face != face:
        raise MalformedCurve(f"interior point of {p.face} used on face {face}")
    x = y = 0.0
    for v, wgt in zip(fv, p.bary):
        x += wgt * place[v][0]
        y += wgt * place[v][1]
    return (x, y)


def lift(tet: Tetrahedron, p: SurfacePoint) -> tuple[float, float, float]:
    """3-D position of a surface point."""
    if isinstance(p, VertexAnchor):
        return tet.point(p.label)
    if isinstance(p, EdgeCrossing):
        a, b = tet.point(p.u), tet.point(p.w)
        return tuple(a[i] + (b[i] - a[i]) * p.t for i in range(3))
    pts = [tet.point(v) for v in face_vertices(p.face)]
    return tuple(sum(wgt * q[i] for wgt, q in zip(p.bary, pts)) for i in range(3))


def face_point(tet: Tetrahedron, face: str, xy, placement=None) -> SurfacePoint:
    """Surface point at planar position ``xy`` of a placement of ``face``."""
    place = placement if placement is not None else face_frame(tet, face)
    fv = face_vertices(face)
    P0, P1, P2 = (place[v] for v in fv)
    area = pl.orient(P0, P1, P2)
    b1 = pl.orient(P0, xy, P2) / area
    b2 = pl.orient(P0, P1, xy) / area
    return FaceInterior(face, (1.0 - b1 - b2, b1, b2))


# ---------------------------------------------------------------------------
# curves
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClosedSurfaceCurve:
    """Cyclic sequence of surface points; ``faces[i]`` holds the segment from
    ``points[i]`` to ``points[i + 1]``."""

    points: tuple[SurfacePoint, ...]
    faces: tuple[str, ...]
    label: str = field(default="", compare=False)

    def __init__(self, points: Sequence[SurfacePoint], faces: Sequence[str], label: str = ""):
        object.__setattr__(self, "points", tuple(points))
        object.__setattr__(self, "faces", tuple(faces))
        object.__setattr__(self, "label", label)
        if len(self.points) < 2:
            raise MalformedCurve("a closed curve needs at least 2 points")
        if len(self.faces) != len(self.points):
            raise MalformedCurve("need one face per segment")
        n = len(self.points)
        for i in range(n):
            F = self.faces[i]
            for p in (self.points[i], self.points[(i + 1) % n]):
                if F not in point_faces(p):
                    raise MalformedCurve(f"point {p} is not on face {F}")

    def __len__(self) -> int:
        return len(self.points)

    def __str__(self) -> str:
        return format_curve(self)

    @property
    def anchors(self) -> list[str]:
        return [p.label for p in self.points if isinstance(p, VertexAnchor)]

    @property
    def is_doubled_edge(self) -> bool:
        return (len(self.points) == 2 and all(isinstance(p, VertexAnchor) for p in self.points)
                and self.points[0] != self.points[1])

    def segments(self):
        n = len(self.points)
        return [(self.points[i], self.points[(i + 1) % n], self.faces[i]) for i in range(n)]

    def reversed(self) -> "ClosedSurfaceCurve":
        n = len(self.points)
        pts = [self.points[(-i) % n] for i in range(n)]
        faces = [self.faces[(-i - 1) % n] for i in range(n)]
        return ClosedSurfaceCurve(pts, faces, self.label)

    def rotated(self, k: int) -> "ClosedSurfaceCurve":
        n = len(self.points)
        k %= n
        return ClosedSurfaceCurve(self.points[k:] + self.points[:k],
                                  self.faces[k:] + self.faces[:k], self.label)


def doubled_edge(u: str, w: str) -> ClosedSurfaceCurve:
    F, G = edge_faces(u, w)
    return ClosedSurfaceCurve([VertexAnchor(u), VertexAnchor(w)], [F, G], label=f"doubled {u}{w}")


def face_boundary(tet: Tetrahedron, face: str) -> ClosedSurfaceCurve:
    cyc = tet.cycle(face)
    start = cyc.index(min(cyc))
    cyc = cyc[start:] + cyc[:start]
    return ClosedSurfaceCurve([VertexAnchor(v) for v in cyc], [face] * 3, label=f"boundary {face}")


def count_vertices(curve: ClosedSurfaceCurve) -> int:
    """Number of distinct vertices on the curve."""
    return len(set(curve.anchors))


def normalize(curve: ClosedSurfaceCurve, tol: Tolerance = DEFAULT_TOL) -> ClosedSurfaceCurve:
    """Snap near-vertex crossings to anchors and merge repeated points."""
    pts = []
    for p in curve.points:
        if isinstance(p, EdgeCrossing):
            p = edge_point(p.u, p.w, p.t, tol)
        pts.append(p)
    faces = list(curve.faces)
    changed = True
    while changed and len(pts) > 2:
        changed = False
        for i in range(len(pts)):
            j = (i + 1) % len(pts)
            if pts[i] == pts[j]:
                del pts[j]
                del faces[i]
                changed = True
                break
    return ClosedSurfaceCurve(pts, faces, curve.label)


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

def format_curve(curve: ClosedSurfaceCurve) -> str:
    """``a (D) bc:0.25 (A) cd:0.5 (B)``: points alternating with the face of
    the following segment; the last face closes the cycle."""
    return " ".join(f"{p} ({F})" for p, F in zip(curve.points, curve.faces))


_TOKEN = re.compile(r"\(([ABCD])\)|([abcd]{2}):([-+0-9.eE]+)|([ABCD])\[([^\]]*)\]|([abcd])(?![a-z:])")


def parse_curve(text: str) -> ClosedSurfaceCurve:
    points, faces = [], []
    pos = 0
    text = text.strip()
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise MalformedCurve(f"cannot parse curve near {text[pos:pos + 12]!r}")
        pos = m.end()
        if m.group(1):
            faces.append(m.group(1))
        elif m.group(2):
            e = m.group(2)
            if e[0] == e[1]:
                raise MalformedCurve(f"bad edge {e}")
            points.append(edge_point(e[0], e[1], float(m.group(3)), Tolerance(0.0)))
        elif m.group(4):
            w = tuple(float(x) for x in m.group(5).split(","))
            if len(w) != 3:
                raise MalformedCurve("barycentric coordinates need 3 numbers")
            points.append(FaceInterior(m.group(4), w))
        else:
            points.append(VertexAnchor(m.group(6)))
        if len(faces) > len(points):
            raise MalformedCurve("face token before any point")
    return ClosedSurfaceCurve(points, faces)


def curves_equal(c1: ClosedSurfaceCurve, c2: ClosedSurfaceCurve, tol: float = 1e-6) -> bool:
    """Same anchors and crossings (parameters within ``tol``) up to cyclic
    rotation and reversal."""
    return crossing_distance(c1, c2) <= tol


def crossing_distance(c1: ClosedSurfaceCurve, c2: ClosedSurfaceCurve) -> float:
    """Largest crossing-parameter mismatch under the best alignment, or
    ``inf`` if the point sequences differ combinatorially."""
    n = len(c1.points)
    if n != len(c2.points) or set(c1.anchors) != set(c2.anchors):
        return math.inf
    best = math.inf
    for seq in (c2.points, c2.reversed().points):
        for k in range(n):
            worst = 0.0
            for i in range(n):
                p, q = c1.points[i], seq[(i + k) % n]
                d = _point_distance(p, q)
                if d > worst:
                    worst = d
                    if worst >= best:
                        break
            best = min(best, worst)
    return best


def _point_distance(p: SurfacePoint, q: SurfacePoint) -> float:
    if type(p) is not type(q):
        return math.inf
    if isinstance(p, VertexAnchor):
        return 0.0 if p == q else math.inf
    if isinstance(p, EdgeCrossing):
        return abs(p.t - q.t) if p.edge == q.edge else math.inf
    if p.face != q.face:
        return math.inf
    return max(abs(x - y) for x, y in zip(p.bary, q.bary))


# ---------------------------------------------------------------------------
# tangent fans and side angles
# ---------------------------------------------------------------------------

def total_angle(tet: Tetrahedron, p: SurfacePoint) -> float:
    return tet.theta(p.label) if isinstance(p, VertexAnchor) else TWO_PI


def fan_angle(tet: Tetrahedron, p: SurfacePoint, q: SurfacePoint, face: str) -> float:
    """Direction from ``p`` towards ``q`` (a straight segment in ``face``)
    as an angle in the tangent fan of ``p``.

    At a vertex the fan runs counterclockwise over the incident faces as
    listed by :meth:`Tetrahedron.fan`.  On an edge ``u -> w`` angle 0 points
    towards ``w`` and ``(0, pi)`` is the face left of ``u -> w``.
    """
    if isinstance(p, VertexAnchor):
        v = p.label
        fan = tet.fan(v)
        if isinstance(q, VertexAnchor):
            for F, x, _, off, _ in fan:
                if x == q.label:
                    return off
            raise MalformedCurve(f"{v}{q.label} is not an edge")
        for F, x, y, off, ang in fan:
            if F == face:
                place = face_frame(tet, face)
                r = pl.sub(place[x], place[v])
                d = pl.sub(locate(tet, face, q, place), place[v])
                a = pl.angle_between(r, d)
                return off + min(max(a, 0.0), ang)
        raise MalformedCurve(f"face {face} is not incident to {v}")
    place = face_frame(tet, face)
    P = locate(tet, face, p, place)
    d = pl.sub(locate(tet, face, q, place), P)
    if isinstance(p, EdgeCrossing):
        u, w = p.u, p.w
        if tet.ccw_next(face, u) == w:
            a = pl.angle_between(pl.sub(place[w], place[u]), d)
            return min(max(a, 0.0), PI)
        a = pl.angle_between(pl.sub(place[u], place[w]), d)
        return PI + min(max(a, 0.0), PI)
    return pl.ccw_angle((1.0, 0.0), d)


def _point_side_angles(tet: Tetrahedron, curve: ClosedSurfaceCurve, i: int) -> tuple[float, float]:
    n = len(curve.points)
    p = curve.points[i]
    prev, nxt = curve.points[i - 1], curve.points[(i + 1) % n]
    Theta = total_angle(tet, p)
    back = fan_angle(tet, p, prev, curve.faces[i - 1])
    fwd = fan_angle(tet, p, nxt, curve.faces[i])
    left = (back - fwd) % Theta
    if Theta - left < 1e-13:
        left = 0.0
    return left, Theta - left


def side_angles(tet: Tetrahedron, curve: ClosedSurfaceCurve, anchor) -> tuple[float, float]:
    """Left and right surface angle of the curve at a vertex anchor.

    For a doubled edge the zero-width side is reported as the left.
    """
    label = anchor.label if isinstance(anchor, VertexAnchor) else anchor
    for i, p in enumerate(curve.points):
        if isinstance(p, VertexAnchor) and p.label == label:
            return _point_side_angles(tet, curve, i)
    raise AnchorNotOnCurve(f"vertex {label} is not on the curve")


def straightness_residual(tet: Tetrahedron, curve: ClosedSurfaceCurve, i: int) -> float:
    """Deviation from straight at non-vertex point ``i``, measured by
    developing the incoming face and unfolding the outgoing one onto it."""
    n = len(curve.points)
    p, prev, nxt = curve.points[i], curve.points[i - 1], curve.points[(i + 1) % n]
    F_in, F_out = curve.faces[i - 1], curve.faces[i]
    pin = face_frame(tet, F_in)
    pout = pin if F_out == F_in else attach(tet, pin, F_out)
    A = locate(tet, F_in, prev, pin)
    B = locate(tet, F_in, p, pin)
    C = locate(tet, F_out, nxt, pout)
    turn = pl.angle_between(pl.sub(B, A), pl.sub(C, B))
    if F_in == F_out and isinstance(p, EdgeCrossing):
        # both segments on one side of the edge: a reflection, never straight
        return abs(turn) if turn else PI
    return abs(turn)


# ---------------------------------------------------------------------------
# simplicity
# ---------------------------------------------------------------------------

def _segment_faces(curve: ClosedSurfaceCurve, i: int) -> tuple[str, ...]:
    p, q, F = curve.segments()[i]
    if isinstance(p, VertexAnchor) and isinstance(q, VertexAnchor):
        return edge_faces(p.label, q.label)
    return (F,)


def is_simple(tet: Tetrahedron, curve: ClosedSurfaceCurve, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Pairwise test of the curve's segments inside each face."""
    if curve.is_doubled_edge:
        return True
    anchors = curve.anchors
    if len(anchors) != len(set(anchors)):
        return False
    seen = []
    for p in curve.points:
        if isinstance(p, EdgeCrossing):
            for q in seen:
                if q.edge == p.edge and abs(q.t - p.t) <= tol.eps:
                    return False
            seen.append(p)
    n = len(curve.points)
    slack = tol.eps * tet.longest_edge
    frames = {F: face_frame(tet, F) for F in "ABCD"}
    segs = curve.segments()
    by_face: dict[str, list] = {F: [] for F in "ABCD"}
    for i, (p, q, _) in enumerate(segs):
        for F in _segment_faces(curve, i):
            by_face[F].append((i, locate(tet, F, p, frames[F]), locate(tet, F, q, frames[F])))
    for F, items in by_face.items():
        for x in range(len(items)):
            i, a, b = items[x]
            for y in range(x + 1, len(items)):
                j, c, d = items[y]
                if i == j:
                    continue
                if (j - i) % n in (1, n - 1):
                    continue
                if pl.segment_distance(a, b, c, d) <= slack:
                    return False
    for i in range(n):
        left, right = _point_side_angles(tet, curve, i)
        if left <= tol.eps or right <= tol.eps:
            return False
    return True


# ---------------------------------------------------------------------------
# which vertices lie on which side
# ---------------------------------------------------------------------------

class _DSU:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[rx] = ry


def _boundary_coord(tet: Tetrahedron, face: str, edge: str, t: float) -> float:
    """Coordinate in ``[0, 3)`` along the counterclockwise boundary of
    ``face`` of the point at parameter ``t`` on normalized ``edge``."""
    cyc = tet.cycle(face)
    for k in range(3):
        s, e = cyc[k], cyc[(k + 1) % 3]
        if s + e == edge:
            return k + t
        if e + s == edge:
            return (k + 1.0 - t) % 3.0
    raise MalformedCurve(f"edge {edge} not on face {face}")


def _point_coord(tet: Tetrahedron, face: str, p: SurfacePoint) -> float:
    if isinstance(p, VertexAnchor):
        return float(tet.cycle(face).index(p.label))
    return _boundary_coord(tet, face, p.edge, p.t)


def _ccw_inside(x: float, a: float, b: float) -> bool:
    """``x`` strictly inside the counterclockwise boundary interval ``a -> b``."""
    dx = (x - a) % 3.0
    db = (b - a) % 3.0
    if db == 0.0:
        db = 3.0
    return 1e-13 < dx < db - 1e-13


def _same(x: float, y: float) -> bool:
    d = abs(x - y) % 3.0
    return min(d, 3.0 - d) < 1e-13


def _side(x: float, chord) -> str | None:
    a, b = chord
    if _same(x, a) or _same(x, b):
        return None
    return "L" if _ccw_inside(x, b, a) else "R"


def _chord_side(c, other):
    for x in c:
        s = _side(x, other)
        if s is not None:
            return s
    return None


def curve_sides(tet: Tetrahedron, curve: ClosedSurfaceCurve) -> tuple[list[str], list[str]]:
    """Vertices strictly left and strictly right of a simple closed curve.

    Purely combinatorial: each face is cut by the chords of the curve, the
    pieces of face boundaries between curve points are glued across edges
    and around off-curve vertices, and each piece picks up the side of the
    chord it touches.
    """
    if curve.is_doubled_edge:
        u, w = curve.anchors
        return [], sorted(other_vertices(u, w))
    on_curve = set(curve.anchors)
    n = len(curve.points)
    segs = curve.segments()
    if not any(not isinstance(p, FaceInterior) for p in curve.points):
        raise MalformedCurve("curve never meets an edge")

    # chords: maximal runs inside one face between boundary points
    start = next(i for i, p in enumerate(curve.points) if not isinstance(p, FaceInterior))
    chords: dict[str, list] = {F: [] for F in "ABCD"}
    edge_runs = set()
    i = start
    count = 0
    while count < n:
        p, q, F = segs[i % n]
        j = i
        while isinstance(q, FaceInterior):
            j += 1
            count += 1
            q2 = segs[j % n]
            if q2[2] != F:
                raise MalformedCurve("face-interior point between different faces")
            q = q2[1]
        if isinstance(p, VertexAnchor) and isinstance(q, VertexAnchor) and j == i:
            e = min(p.label, q.label) + max(p.label, q.label)
            edge_runs.add(e)
            for G in edge_faces(p.label, q.label):
                chords[G].append((_point_coord(tet, G, p), _point_coord(tet, G, q)))
        else:
            chords[F].append((_point_coord(tet, F, p), _point_coord(tet, F, q)))
        count += 1
        i = j + 1

    # marks on every edge
    marks = {}
    for e in ("ab", "ac", "ad", "bc", "bd", "cd"):
        ts = {0.0, 1.0}
        for p in curve.points:
            if isinstance(p, EdgeCrossing) and p.edge == e:
                ts.add(p.t)
        marks[e] = sorted(ts)

    dsu = _DSU()
    labels: dict = {}
    arcs_by_face: dict[str, list] = {F: [] for F in "ABCD"}
    for e, ts in marks.items():
        for k in range(len(ts) - 1):
            if e in edge_runs and len(ts) == 2:
                continue
            tm = 0.5 * (ts[k] + ts[k + 1])
            for F in edge_faces(e[0], e[1]):
                arcs_by_face[F].append(((F, e, k), _boundary_coord(tet, F, e, tm)))
            F, G = edge_faces(e[0], e[1])
            dsu.union((F, e, k), (G, e, k))

    for F, arcs in arcs_by_face.items():
        cs = chords[F]
        sigs = {}
        for key, x in arcs:
            dsu.find(key)
            sig = tuple(_side(x, c) for c in cs)
            if sig in sigs:
                dsu.union(key, sigs[sig])
            else:
                sigs[sig] = key
            for ci, c in enumerate(cs):
                s = sig[ci]
                if s is None:
                    continue
                if all(sig[cj] == _chord_side(c, cs[cj]) for cj in range(len(cs))
                       if cj != ci and _chord_side(c, cs[cj]) is not None):
                    labels.setdefault(key, set()).add(s)

    for w in VERTICES:
        if w in on_curve:
            continue
        keys = []
        for e, ts in marks.items():
            if w not in e:
                continue
            k = 0 if w == e[0] else len(ts) - 2
            for F in edge_faces(e[0], e[1]):
                keys.append((F, e, k))
        for key in keys[1:]:
            dsu.union(keys[0], key)

    region_label: dict = {}
    for key, ls in labels.items():
        region_label.setdefault(dsu.find(key), set()).update(ls)
    left, right = [], []
    for w in VERTICES:
        if w in on_curve:
            continue
        e = next(e for e in marks if w in e)
        k = 0 if w == e[0] else len(marks[e]) - 2
        ls = region_label.get(dsu.find((edge_faces(e[0], e[1])[0], e, k)), set())
        if len(ls) != 1:
            raise NonSimpleCurve(f"cannot assign a side to vertex {w}")
        (left if "L" in ls else right).append(w)
    return left, right


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

GEODESIC = "Geodesic"
QUASIGEODESIC = "Quasigeodesic"
NOT_QUASIGEODESIC = "NotQuasigeodesic"


@dataclass(frozen=True)
class QuasigeodesicReport:
    k: int
    angles: dict[str, tuple[float, float]]
    residuals: tuple[float, ...]
    simple: bool
    turn_left: float
    turn_right: float
    curvature_left: float | None
    curvature_right: float | None
    left_vertices: tuple[str, ...]
    right_vertices: tuple[str, ...]
    verdict: str
    degenerate: bool

    @property
    def max_residual(self) -> float:
        return max(self.residuals, default=0.0)

    @property
    def max_side_angle(self) -> float:
        return max((max(a) for a in self.angles.values()), default=PI)

    @property
    def is_quasigeodesic(self) -> bool:
        return self.verdict in (GEODESIC, QUASIGEODESIC)

    def gauss_bonnet_residuals(self) -> tuple[float, float]:
        if self.curvature_left is None:
            raise NonSimpleCurve("sides are undefined for a non-simple curve")
        return (abs(self.turn_left + self.curvature_left - TWO_PI),
                abs(self.turn_right + self.curvature_right - TWO_PI))


def verify(tet: Tetrahedron, curve: ClosedSurfaceCurve, tol: Tolerance | None = None) -> QuasigeodesicReport:
    """Check straightness, side angles and simplicity of a closed curve."""
    tol = tol or tet.tol
    curve = normalize(curve, tol)
    angles = {}
    residuals = []
    turn_l = turn_r = 0.0
    for i, p in enumerate(curve.points):
        left, right = _point_side_angles(tet, curve, i)
        turn_l += PI - left
        turn_r += PI - right
        if isinstance(p, VertexAnchor):
            angles[p.label] = (left, right)
        elif curve.is_doubled_edge:
            pass
        else:
            residuals.append(straightness_residual(tet, curve, i))
    simple = is_simple(tet, curve, tol)
    lv: list[str] = []
    rv: list[str] = []
    om_l = om_r = None
    if simple:
        try:
            lv, rv = curve_sides(tet, curve)
        except NonSimpleCurve:
            simple = False
        else:
            om_l = sum(tet.curvature(v) for v in lv)
            om_r = sum(tet.curvature(v) for v in rv)
    k = len(angles)
    ok = (simple and all(r <= tol.eps for r in residuals)
          and all(a <= PI + tol.eps and b <= PI + tol.eps for a, b in angles.values()))
    verdict = NOT_QUASIGEODESIC
    if ok:
        verdict = GEODESIC if k == 0 else QUASIGEODESIC
    return QuasigeodesicReport(
        k=k, angles=angles, residuals=tuple(residuals), simple=simple,
        turn_left=turn_l, turn_right=turn_r, curvature_left=om_l, curvature_right=om_r,
        left_vertices=tuple(lv), right_vertices=tuple(rv), verdict=verdict,
        degenerate=curve.is_doubled_edge,
    )


def gauss_bonnet_residual(tet: Tetrahedron, curve: ClosedSurfaceCurve,
                          tol: Tolerance | None = None) -> tuple[float, float]:
    """``|turn + enclosed curvature - 2 pi|`` on the left and right sides."""
    tol = tol or tet.tol
    curve = normalize(curve, tol)
    if not is_simple(tet, curve, tol):
        raise NonSimpleCurve("Gauss-Bonnet needs a simple curve")
    rep = verify(tet, curve, tol)
    return rep.gauss_bonnet_residuals()
