"""Tetrahedron data model: face angles, curvatures, validation, classification.

Labels follow a fixed convention.  Vertices are ``a, b, c, d``; face ``A``
is the face opposite ``a`` (so it has vertices ``b, c, d``), and likewise
for ``B, C, D``.  A face angle is addressed by a vertex and a face, written
as a two-letter key such as ``"aB"``.

All angles are in radians.  Lengths are in whatever unit the coordinates
use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import DegenerateInput, FlatTetrahedron, InputError, InternalContradiction

VERTICES = "abcd"
FACES = "ABCD"
EDGES = ("ab", "ac", "ad", "bc", "bd", "cd")
PI = math.pi
TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Tolerance:
    """Single tolerance knob.

    ``eps`` is used relative to lengths (scaled by the longest edge) and
    absolute on radians.
    """

    eps: float = 1e-9

    def angle_eq(self, x: float, y: float) -> bool:
        return abs(x - y) <= self.eps

    def angle_lt(self, x: float, y: float) -> bool:
        """Strictly less beyond tolerance."""
        return x < y - self.eps

    def angle_gt(self, x: float, y: float) -> bool:
        return x > y + self.eps


DEFAULT_TOL = Tolerance()


def face_vertices(face: str) -> str:
    """Vertex labels of ``face`` in label order."""
    return VERTICES.replace(face.lower(), "")


def vertex_faces(v: str) -> str:
    """Labels of the three faces incident to vertex ``v``."""
    return FACES.replace(v.upper(), "")


def edge_faces(u: str, v: str) -> tuple[str, str]:
    """The two faces sharing edge ``uv``, in label order."""
    f = [F for F in FACES if F.lower() not in (u, v)]
    return f[0], f[1]


def edge_label(u: str, v: str) -> str:
    return u + v if u < v else v + u


def other_vertices(*labels: str) -> str:
    return "".join(x for x in VERTICES if x not in labels)


def angle_key(v: str, face: str) -> str:
    return v + face


# ---------------------------------------------------------------------------
# angle table
# ---------------------------------------------------------------------------

ANGLE_KEYS = tuple(v + F for v in VERTICES for F in vertex_faces(v))


class AngleTable(Mapping[str, float]):
    """The 12 face angles of a tetrahedron, keyed like ``"aB"``.

    Behaves as a read-only mapping; values in radians.
    """

    __slots__ = ("_values",)

    def __init__(self, values: Mapping[str, float]):
        missing = [k for k in ANGLE_KEYS if k not in values]
        extra = [k for k in values if k not in ANGLE_KEYS]
        if missing or extra:
            raise InputError(f"angle table keys: missing {missing}, unexpected {extra}")
        self._values = {k: float(values[k]) for k in ANGLE_KEYS}

    @classmethod
    def from_degrees(cls, values: Mapping[str, float]) -> "AngleTable":
        return cls({k: math.radians(float(x)) for k, x in values.items()})

    def __getitem__(self, key: str) -> float:
        return self._values[key]

    def __iter__(self):
        return iter(ANGLE_KEYS)

    def __len__(self) -> int:
        return 12

    def __repr__(self) -> str:
        body = ", ".join(f"{k}={math.degrees(x):.2f}" for k, x in self._values.items())
        return f"AngleTable({body})"

    def angle(self, v: str, face: str) -> float:
        return self._values[v + face]

    def theta(self, v: str) -> float:
        """Complete angle at ``v``."""
        return sum(self._values[v + F] for F in vertex_faces(v))

    def curvature(self, v: str) -> float:
        return TWO_PI - self.theta(v)

    def face_sum(self, face: str) -> float:
        return sum(self._values[u + face] for u in face_vertices(face))

    def degrees(self) -> dict[str, float]:
        return {k: math.degrees(x) for k, x in self._values.items()}


def check_angle_table(
    table: AngleTable, allow_flat: bool = False, tol: Tolerance = DEFAULT_TOL,
    sum_tol: float | None = None,
) -> None:
    """Raise :class:`InputError` unless ``table`` is a consistent angle set.

    Checks ranges, face sums and the vertex triangle inequalities (strict
    unless ``allow_flat``).
    """
    sum_tol = tol.eps if sum_tol is None else sum_tol
    for k in ANGLE_KEYS:
        x = table[k]
        if not 0.0 < x < PI:
            raise InputError(f"face angle {k} = {math.degrees(x):.6g} deg outside (0, 180)")
    for F in FACES:
        s = table.face_sum(F)
        if abs(s - PI) > sum_tol:
            raise InputError(f"face {F} angles sum to {math.degrees(s):.9g} deg, not 180")
    for v in VERTICES:
        ok = _vertex_triangle_ok(table, v, allow_flat, tol)
        if not ok:
            raise InputError(f"vertex {v} angles violate the triangle inequality")


def _vertex_triangle_ok(table: Mapping[str, float], v: str, allow_flat: bool, tol: Tolerance) -> bool:
    xs = [table[v + F] for F in vertex_faces(v)]
    for i in range(3):
        rest = xs[(i + 1) % 3] + xs[(i + 2) % 3]
        if allow_flat:
            if xs[i] > rest + tol.eps:
                return False
        elif not xs[i] < rest - tol.eps:
            return False
    return True


# ---------------------------------------------------------------------------
# small vector helpers (plain floats are much faster than numpy for 3-vectors)
# ---------------------------------------------------------------------------

def _sub(p, q):
    return (p[0] - q[0], p[1] - q[1], p[2] - q[2])


def _dot(p, q):
    return p[0] * q[0] + p[1] * q[1] + p[2] * q[2]


def _cross(p, q):
    return (p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0])


def _norm(p):
    return math.sqrt(_dot(p, p))


def _angle3(v, p, q) -> float:
    """Angle at ``v`` of triangle ``v p q`` (numerically stable form)."""
    x = _sub(p, v)
    y = _sub(q, v)
    return math.atan2(_norm(_cross(x, y)), _dot(x, y))


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ValidationReport:
    volume: float
    longest_edge: float
    flat: bool
    face_areas: dict[str, float]
    triangle_inequalities: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.triangle_inequalities.values())


def validate(points: Sequence[Sequence[float]], allow_flat: bool = False,
             tol: Tolerance = DEFAULT_TOL) -> ValidationReport:
    """Check that four points span a usable tetrahedron.

    Raises
    ------
    DegenerateInput
        Coincident points or a face with (near) zero area.
    FlatTetrahedron
        Zero volume while ``allow_flat`` is off.
    """
    if len(points) != 4 or any(len(p) != 3 for p in points):
        raise InputError("expected 4 coordinate triples")
    pts = [tuple(float(x) for x in p) for p in points]
    if not all(math.isfinite(x) for p in pts for x in p):
        raise InputError("non-finite coordinate")
    lengths = [_norm(_sub(pts[VERTICES.index(e[0])], pts[VERTICES.index(e[1])])) for e in EDGES]
    L = max(lengths)
    if L == 0.0 or min(lengths) <= tol.eps * L:
        raise DegenerateInput("coincident vertices")
    areas = {}
    for F in FACES:
        i, j, k = (VERTICES.index(x) for x in face_vertices(F))
        areas[F] = 0.5 * _norm(_cross(_sub(pts[j], pts[i]), _sub(pts[k], pts[i])))
        if areas[F] <= tol.eps * L * L:
            raise DegenerateInput(f"face {F} is degenerate (collinear vertices)")
    vol = _dot(_sub(pts[1], pts[0]), _cross(_sub(pts[2], pts[0]), _sub(pts[3], pts[0]))) / 6.0
    flat = abs(6.0 * vol) <= tol.eps * L ** 3
    if flat and not allow_flat:
        raise FlatTetrahedron("the four points are coplanar")
    table = _angles_from_points(pts)
    tri = {v: _vertex_triangle_ok(table, v, allow_flat or flat, tol) for v in VERTICES}
    return ValidationReport(vol, L, flat, areas, tri)


def _angles_from_points(pts) -> dict[str, float]:
    out = {}
    for F in FACES:
        fv = face_vertices(F)
        for v in fv:
            p, q = (x for x in fv if x != v)
            out[v + F] = _angle3(pts[VERTICES.index(v)], pts[VERTICES.index(p)], pts[VERTICES.index(q)])
    return out


# ---------------------------------------------------------------------------
# tetrahedron
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Tetrahedron:
    """Four labelled points in 3-space, validated on construction.

    Parameters
    ----------
    points : sequence of 4 triples
        Coordinates of ``a, b, c, d``.
    allow_flat : bool
        Accept coplanar input (a doubly covered quadrilateral).
    tol : Tolerance
    """

    points: tuple[tuple[float, float, float], ...]
    allow_flat: bool = False
    tol: Tolerance = field(default=DEFAULT_TOL)

    def __init__(self, points, allow_flat: bool = False, tol: Tolerance = DEFAULT_TOL):
        pts = tuple(tuple(float(x) for x in p) for p in points)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "allow_flat", bool(allow_flat))
        object.__setattr__(self, "tol", tol)
        object.__setattr__(self, "report", validate(pts, allow_flat, tol))

    @classmethod
    def from_mapping(cls, vertices: Mapping[str, Sequence[float]], **kw) -> "Tetrahedron":
        return cls([vertices[v] for v in VERTICES], **kw)

    def __repr__(self) -> str:
        body = ", ".join(f"{v}={p}" for v, p in zip(VERTICES, self.points))
        return f"Tetrahedron({body})"

    def point(self, v: str) -> tuple[float, float, float]:
        return self.points[VERTICES.index(v)]

    @cached_property
    def _lengths(self) -> dict[str, float]:
        out = {}
        for e in EDGES:
            d = _norm(_sub(self.point(e[0]), self.point(e[1])))
            out[e] = out[e[::-1]] = d
        return out

    def length(self, u: str, v: str) -> float:
        return self._lengths[u + v]

    @property
    def longest_edge(self) -> float:
        return self.report.longest_edge

    @property
    def volume(self) -> float:
        return self.report.volume

    @property
    def is_flat(self) -> bool:
        return self.report.flat

    @cached_property
    def angles(self) -> AngleTable:
        return AngleTable(_angles_from_points(self.points))

    def angle(self, v: str, face: str) -> float:
        return self.angles[v + face]

    def theta(self, v: str) -> float:
        return self.angles.theta(v)

    def curvature(self, v: str) -> float:
        return self.angles.curvature(v)

    @cached_property
    def _cycles(self) -> dict[str, str]:
        # For det(b-a, c-a, d-a) > 0 the outward counterclockwise cycles are
        # the even-permutation images of (a, c, b) for face D.
        pos = {"A": "dbc", "B": "cad", "C": "bda", "D": "acb"}
        if self.report.volume < 0:
            return {F: s[0] + s[2] + s[1] for F, s in pos.items()}
        return pos

    def cycle(self, face: str) -> str:
        """Vertices of ``face`` in counterclockwise order seen from outside."""
        return self._cycles[face]

    def ccw_next(self, face: str, v: str) -> str:
        cyc = self._cycles[face]
        return cyc[(cyc.index(v) + 1) % 3]

    @cached_property
    def _fans(self) -> dict[str, tuple[tuple[str, str, str, float, float], ...]]:
        out = {}
        for v in VERTICES:
            first = {}
            for F in vertex_faces(v):
                x = self.ccw_next(F, v)
                y = self.ccw_next(F, x)
                first[x] = (F, x, y)
            F0 = vertex_faces(v)[0]
            x = self.ccw_next(F0, v)
            sectors = []
            offset = 0.0
            for _ in range(3):
                F, x, y = first[x]
                a = self.angle(v, F)
                sectors.append((F, x, y, offset, a))
                offset += a
                x = y
            out[v] = tuple(sectors)
        return out

    def fan(self, v: str):
        """Sectors around ``v`` in counterclockwise order.

        Each sector is ``(face, x, y, offset, angle)``: ``face`` spans the
        directions from edge ``v->x`` (at fan angle ``offset``) to edge
        ``v->y`` (at ``offset + angle``).
        """
        return self._fans[v]


def _as_angles(obj) -> AngleTable:
    if isinstance(obj, Tetrahedron):
        return obj.angles
    if isinstance(obj, AngleTable):
        return obj
    raise TypeError(f"expected Tetrahedron or AngleTable, got {type(obj).__name__}")


def face_angles(tet: Tetrahedron) -> AngleTable:
    """Planar angle of each face triangle at each of its vertices."""
    return tet.angles


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Classification:
    curvatures: dict[str, float]
    complete_angles: dict[str, float]
    is_isosceles: bool
    pointed_at: str | None
    high_curvature_count: int
    is_f_acute: bool

    @property
    def total_curvature(self) -> float:
        return sum(self.curvatures.values())


def classify(tet: Tetrahedron | AngleTable, tol: Tolerance | None = None) -> Classification:
    """Curvatures, isosceles / pointed / f-acute flags.

    Raises :class:`InternalContradiction` if the curvature sum is not
    ``4 pi`` (up to rounding).
    """
    tol = tol or getattr(tet, "tol", DEFAULT_TOL)
    table = _as_angles(tet)
    omega = {v: table.curvature(v) for v in VERTICES}
    theta = {v: table.theta(v) for v in VERTICES}
    total = sum(omega.values())
    if abs(total - 4 * PI) > max(tol.eps, 1e-12) * 4 * PI + 1e-12:
        raise InternalContradiction(f"total curvature {total!r} is not 4*pi")
    high = [v for v in VERTICES if tol.angle_gt(omega[v], PI)]
    iso = all(tol.angle_eq(omega[v], PI) for v in VERTICES)
    acute = all(table[k] < PI / 2 - tol.eps for k in ANGLE_KEYS)
    return Classification(
        curvatures=omega,
        complete_angles=theta,
        is_isosceles=iso,
        pointed_at=high[0] if len(high) == 1 else None,
        high_curvature_count=len(high),
        is_f_acute=acute,
    )


def acute_endpoint_of_longest_edge(tet: Tetrahedron) -> str:
    """An endpoint of a longest edge whose three face angles are acute.

    Longest-edge ties are resolved in edge-label order, and the endpoints
    are tried in label order.
    """
    tol = tet.tol
    L = tet.longest_edge
    best = None
    for e in EDGES:
        if best is None or tet.length(*e) > tet.length(*best) + tol.eps * L:
            best = e
    slack = tol.eps if tet.is_flat else -tol.eps
    for v in best:
        if all(tet.angle(v, F) < PI / 2 + slack for F in vertex_faces(v)):
            return v
    raise InternalContradiction(f"no endpoint of longest edge {best} has all angles acute")


def regular_tetrahedron(edge: float = 1.0) -> Tetrahedron:
    """Regular tetrahedron with base ``bcd`` in the plane z=0 and apex ``a``."""
    h = edge * math.sqrt(2.0 / 3.0)
    r = edge / math.sqrt(3.0)
    base = [(r * math.cos(t), r * math.sin(t), 0.0) for t in (0.0, 2 * PI / 3, 4 * PI / 3)]
    return Tetrahedron([(0.0, 0.0, h)] + base)


def isosceles_tetrahedron(p: float, q: float, r: float) -> Tetrahedron:
    """Isosceles tetrahedron whose faces are congruent to the (acute) triangle
    with sides ``p = |ab| = |cd|``, ``q = |ac| = |bd|``, ``r = |ad| = |bc|``.
    """
    x2 = (q * q + r * r - p * p) / 8.0
    y2 = (p * p + r * r - q * q) / 8.0
    z2 = (p * p + q * q - r * r) / 8.0
    if min(x2, y2, z2) <= 0:
        raise InputError("isosceles tetrahedra need an acute triangle")
    x, y, z = math.sqrt(x2), math.sqrt(y2), math.sqrt(z2)
    return Tetrahedron([(x, y, z), (x, -y, -z), (-x, y, -z), (-x, -y, z)])


def iter_vertex_pairs() -> Iterable[tuple[str, str]]:
    return ((e[0], e[1]) for e in EDGES)
