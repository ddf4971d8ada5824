"""Small planar geometry helpers on ``(x, y)`` tuples."""

from __future__ import annotations

import math

Point = tuple[float, float]


def sub(p: Point, q: Point) -> Point:
    return (p[0] - q[0], p[1] - q[1])


def add(p: Point, q: Point) -> Point:
    return (p[0] + q[0], p[1] + q[1])


def scale(p: Point, s: float) -> Point:
    return (p[0] * s, p[1] * s)


def lerp(p: Point, q: Point, t: float) -> Point:
    return (p[0] + (q[0] - p[0]) * t, p[1] + (q[1] - p[1]) * t)


def cross(p: Point, q: Point) -> float:
    return p[0] * q[1] - p[1] * q[0]


def dot(p: Point, q: Point) -> float:
    return p[0] * q[0] + p[1] * q[1]


def norm(p: Point) -> float:
    return math.hypot(p[0], p[1])


def dist(p: Point, q: Point) -> float:
    return math.hypot(p[0] - q[0], p[1] - q[1])


def orient(a: Point, b: Point, c: Point) -> float:
    """Twice the signed area of ``abc``; positive when counterclockwise."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def rotate(p: Point, angle: float) -> Point:
    c, s = math.cos(angle), math.sin(angle)
    return (c * p[0] - s * p[1], s * p[0] + c * p[1])


def angle_between(u: Point, w: Point) -> float:
    """Counterclockwise angle from ``u`` to ``w`` in ``(-pi, pi]``."""
    return math.atan2(cross(u, w), dot(u, w))


def ccw_angle(u: Point, w: Point) -> float:
    """Counterclockwise angle from ``u`` to ``w`` in ``[0, 2 pi)``."""
    a = math.atan2(cross(u, w), dot(u, w))
    return a + 2 * math.pi if a < 0 else a


def interior_angle(prev: Point, p: Point, nxt: Point) -> float:
    """Interior angle at ``p`` of a counterclockwise polygon."""
    return ccw_angle(sub(nxt, p), sub(prev, p))


def place_apex(P: Point, Q: Point, angle_at_p: float, length_pr: float, left: bool) -> Point:
    """Third triangle vertex from base ``PQ``, the angle at ``P`` and ``|PR|``."""
    d = sub(Q, P)
    n = norm(d)
    u = (d[0] / n, d[1] / n)
    r = rotate(u, angle_at_p if left else -angle_at_p)
    return (P[0] + r[0] * length_pr, P[1] + r[1] * length_pr)


def seg_intersection(p: Point, p2: Point, q: Point, q2: Point):
    """Parameters ``(s, t)`` of the crossing of segments ``p p2`` and ``q q2``
    along their supporting lines, or ``None`` if parallel."""
    r = sub(p2, p)
    s_ = sub(q2, q)
    den = cross(r, s_)
    if den == 0.0:
        return None
    w = sub(q, p)
    return cross(w, s_) / den, cross(w, r) / den


def point_segment_distance(x: Point, a: Point, b: Point) -> float:
    ab = sub(b, a)
    L2 = dot(ab, ab)
    if L2 == 0.0:
        return dist(x, a)
    t = max(0.0, min(1.0, dot(sub(x, a), ab) / L2))
    return dist(x, lerp(a, b, t))


def segment_distance(a: Point, b: Point, c: Point, d: Point) -> float:
    """Minimum distance between closed segments ``ab`` and ``cd``."""
    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    if ((o1 > 0 > o2) or (o1 < 0 < o2)) and ((o3 > 0 > o4) or (o3 < 0 < o4)):
        return 0.0
    return min(point_segment_distance(a, c, d), point_segment_distance(b, c, d),
               point_segment_distance(c, a, b), point_segment_distance(d, a, b))


def circumcenter(a: Point, b: Point, c: Point):
    """Circumcenter of ``abc`` or ``None`` if (exactly) collinear."""
    bx, by = b[0] - a[0], b[1] - a[1]
    cx, cy = c[0] - a[0], c[1] - a[1]
    d = 2.0 * (bx * cy - by * cx)
    if d == 0.0:
        return None
    b2 = bx * bx + by * by
    c2 = cx * cx + cy * cy
    return (a[0] + (cy * b2 - by * c2) / d, a[1] + (bx * c2 - cx * b2) / d)


def in_triangle(x: Point, a: Point, b: Point, c: Point, slack: float = 0.0) -> bool:
    """Containment in the counterclockwise triangle ``abc``.

    ``slack`` is a distance; points within it of the boundary count as inside.
    """
    for p, q in ((a, b), (b, c), (c, a)):
        L = dist(p, q)
        if orient(p, q, x) < -slack * L:
            return False
    return True


def polygon_area(pts) -> float:
    s = 0.0
    n = len(pts)
    for i in range(n):
        s += cross(pts[i], pts[(i + 1) % n])
    return 0.5 * s


def polygon_is_simple(pts, slack: float = 0.0) -> bool:
    n = len(pts)
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        for j in range(i + 1, n):
            if j == i or (j + 1) % n == i or j == (i + 1) % n:
                continue
            c, d = pts[j], pts[(j + 1) % n]
            if segment_distance(a, b, c, d) <= slack:
                return False
    return True
