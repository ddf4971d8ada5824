"""Brute-force cross-checks: straight-line tracing on the surface and a
direction sweep that finds every geodesic loop at a vertex.

The sweep samples departure directions, traces them in batch through face
developments, and looks for adjacent samples whose face sequences part.
Where two rays part, a vertex image separates them; its direction is the
exact departure of a vertex-to-vertex geodesic.  Nested events are found
by probing on both sides and recursing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from . import planar as pl
from .construct import VertexGeodesic
from .curves import (
    ClosedSurfaceCurve, EdgeCrossing, FaceInterior, QuasigeodesicReport, SurfacePoint,
    VertexAnchor, curves_equal, edge_point, face_point, locate, verify,
)
from .errors import DegenerateDirection, MalformedCurve, NumericalDegeneracy
from .tetra import PI, VERTICES, Tetrahedron, Tolerance, edge_faces, face_vertices
from .unfolding import attach, face_frame

# ---------------------------------------------------------------------------
# single-ray tracing from an arbitrary start
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TraceState:
    face: str
    frame: dict
    point: tuple[float, float]
    direction: tuple[float, float]
    length: float


@dataclass(frozen=True)
class TraceResult:
    """Path of a traced straight line.

    ``faces[i]`` holds the segment from ``path[i]`` to ``path[i + 1]``.
    ``termination`` is one of ``"max_length"``, ``"vertex"`` (vertex hit,
    label in ``vertex``) or ``"closed"`` (came back to the start point
    heading the same way).
    """

    path: tuple[SurfacePoint, ...]
    faces: tuple[str, ...]
    length: float
    termination: str
    vertex: str | None = None
    state: TraceState | None = None

    def curve(self) -> ClosedSurfaceCurve:
        """The closed curve of a self-returning trace or of a loop back to
        a starting vertex."""
        if self.termination == "closed":
            return ClosedSurfaceCurve(self.path, self.faces)
        if (self.termination == "vertex" and isinstance(self.path[0], VertexAnchor)
                and self.path[0].label == self.vertex):
            return ClosedSurfaceCurve(self.path[:-1], self.faces)
        raise MalformedCurve("trace did not close up")


def _start_frame(tet: Tetrahedron, start: SurfacePoint, direction: float):
    """Face, placement, start image and unit direction for a trace."""
    eps = tet.tol.eps
    if isinstance(start, VertexAnchor):
        v = start.label
        theta = tet.theta(v)
        phi = direction % theta if direction != theta else direction
        for F, x, y, off, ang in tet.fan(v):
            if off - eps <= phi <= off + ang + eps:
                alpha = phi - off
                if alpha <= eps or ang - alpha <= eps:
                    raise DegenerateDirection(f"direction runs along an edge at {v}")
                place = face_frame(tet, F)
                u = pl.sub(place[x], place[v])
                d = pl.rotate(pl.scale(u, 1.0 / pl.norm(u)), alpha)
                return F, place, place[v], d, None
        raise DegenerateDirection("direction outside the vertex fan")
    if isinstance(start, EdgeCrossing):
        u, w = start.u, start.w
        a = direction % (2 * PI)
        if a <= eps or abs(a - PI) <= eps or 2 * PI - a <= eps:
            raise DegenerateDirection("direction runs along the start edge")
        F_left = next(F for F in edge_faces(u, w) if tet.ccw_next(F, u) == w)
        F_right = next(F for F in edge_faces(u, w) if F != F_left)
        if a < PI:
            F, base, rot = F_left, (u, w), a
        else:
            F, base, rot = F_right, (w, u), a - PI
        place = face_frame(tet, F)
        e = pl.sub(place[base[1]], place[base[0]])
        d = pl.rotate(pl.scale(e, 1.0 / pl.norm(e)), rot)
        return F, place, locate(tet, F, start, place), d, u + w
    F = start.face
    place = face_frame(tet, F)
    return F, place, locate(tet, F, start, place), (math.cos(direction), math.sin(direction)), None


def _frame_rotation(tet: Tetrahedron, face: str, place) -> float:
    """Rotation taking the canonical frame of ``face`` to ``place``."""
    ref = face_frame(tet, face)
    fv = face_vertices(face)
    return pl.angle_between(pl.sub(ref[fv[1]], ref[fv[0]]), pl.sub(place[fv[1]], place[fv[0]]))


def trace(tet: Tetrahedron, start: SurfacePoint, direction: float, max_length: float,
          tol: Tolerance | None = None, max_steps: int = 100000) -> TraceResult:
    """Follow the straight line leaving ``start`` in fan direction
    ``direction`` (the convention of :func:`quasigeo.curves.fan_angle`).

    Raises
    ------
    DegenerateDirection
        The line meets an edge (numerically) tangentially.
    """
    tol = tol or tet.tol
    if max_length <= 0:
        return TraceResult((), (), 0.0, "max_length")
    L = tet.longest_edge
    slack = tol.eps * L
    F, place, S, d, entry = _start_frame(tet, start, direction)
    start_face, start_rot = F, _frame_rotation(tet, F, place)
    start_dir = d
    path: list[SurfacePoint] = [start]
    faces: list[str] = []
    lam_cur = 0.0
    for _ in range(max_steps):
        fv = face_vertices(F)
        best = None
        for u, w in ((fv[0], fv[1]), (fv[0], fv[2]), (fv[1], fv[2])):
            if u + w == entry:
                continue
            P, Q = place[u], place[w]
            hit = pl.seg_intersection(S, pl.add(S, d), P, Q)
            if hit is None:
                continue
            lam, t = hit
            elen = pl.dist(P, Q)
            if lam <= lam_cur + slack or t < -slack / elen or t > 1 + slack / elen:
                continue
            if best is None or lam < best[0]:
                best = (lam, t, u, w, elen)
        if best is None:
            raise NumericalDegeneracy("traced line found no exit edge")
        lam, t, u, w, elen = best
        # return to the start point inside this face copy
        if F == start_face and not isinstance(start, VertexAnchor) and len(path) > 1:
            Simg = locate(tet, F, start, place)
            rel = pl.sub(Simg, S)
            ls = pl.dot(rel, d)
            off = abs(pl.cross(d, rel))
            rot = _frame_rotation(tet, F, place) - start_rot
            same_dir = abs(pl.angle_between(pl.rotate(start_dir, rot), d)) <= 1e3 * tol.eps
            if off <= 1e3 * slack and lam_cur - slack <= ls <= lam + slack and same_dir and ls <= max_length:
                if isinstance(start, EdgeCrossing) and ls <= lam_cur + 1e3 * slack:
                    # closed on the start edge itself: last crossing is the start
                    path.pop()
                else:
                    faces.append(F)
                st = TraceState(F, place, Simg, d, ls)
                return TraceResult(tuple(path), tuple(faces), ls, "closed", state=st)
        if lam >= max_length:
            end = pl.add(S, pl.scale(d, max_length))
            path.append(face_point(tet, F, end, place))
            faces.append(F)
            return TraceResult(tuple(path), tuple(faces), max_length, "max_length",
                               state=TraceState(F, place, end, d, max_length))
        if t * elen <= slack or (1 - t) * elen <= slack:
            vx = u if t * elen <= slack else w
            path.append(VertexAnchor(vx))
            faces.append(F)
            return TraceResult(tuple(path), tuple(faces), lam, "vertex", vx,
                               TraceState(F, place, place[vx], d, lam))
        eu = pl.scale(pl.sub(place[w], place[u]), 1.0 / elen)
        if abs(pl.cross(d, eu)) <= tol.eps:
            raise DegenerateDirection(f"line runs along edge {u}{w}")
        path.append(edge_point(u, w, t, Tolerance(0.0)))
        faces.append(F)
        G = next(g for g in edge_faces(u, w) if g != F)
        place = attach(tet, {u: place[u], w: place[w]}, G)
        F, entry, lam_cur = G, u + w, lam
    raise NumericalDegeneracy("trace exceeded its step budget")


# ---------------------------------------------------------------------------
# vertex sweeps
# ---------------------------------------------------------------------------

_IDX = {v: i for i, v in enumerate(VERTICES)}


def _geometry(tet: Tetrahedron, v: str):
    L = np.zeros((4, 4))
    for a in VERTICES:
        for b in VERTICES:
            if a != b:
                L[_IDX[a], _IDX[b]] = tet.length(a, b)
    fan = tet.fan(v)
    sec_face = np.array([_IDX[F.lower()] for F, *_ in fan], dtype=np.int64)
    sec_x = np.array([_IDX[x] for _, x, _, _, _ in fan], dtype=np.int64)
    sec_y = np.array([_IDX[y] for _, _, y, _, _ in fan], dtype=np.int64)
    sec_off = np.array([s[3] for s in fan])
    sec_ang = np.array([s[4] for s in fan])
    return L, sec_face, sec_x, sec_y, sec_off, sec_ang


def ray_steps(tet: Tetrahedron, v: str, phi: float, nsteps: int):
    """Development of the ray at fan angle ``phi`` from ``v`` for
    ``nsteps`` edge crossings, in the kernel's local frame.

    Returns a list of ``(p, P, q, Q, face_before, face_after, r, R)``:
    the crossed edge with its images (``P`` clockwise of the ray), the
    faces on either side and the vertex revealed beyond it.
    """
    sector = None
    for F, x, y, off, ang in tet.fan(v):
        if phi >= off:
            sector = (F, x, y, off, ang)
    F, x, y, off, ang = sector
    p, q = x, y
    P = (tet.length(v, x), 0.0)
    Q = (tet.length(v, y) * math.cos(ang), tet.length(v, y) * math.sin(ang))
    alpha = phi - off
    d = (math.cos(alpha), math.sin(alpha))
    f = F
    out = []
    for _ in range(nsteps + 1):
        G = next(g for g in edge_faces(p, q) if g != f)
        r = f.lower()
        ex, ey = Q[0] - P[0], Q[1] - P[1]
        e = math.hypot(ex, ey)
        ux, uy = ex / e, ey / e
        lpr, lqr = tet.length(p, r), tet.length(q, r)
        a = (e * e + lpr * lpr - lqr * lqr) / (2 * e)
        h = math.sqrt(max(lpr * lpr - a * a, 0.0))
        R = (P[0] + a * ux + h * uy, P[1] + a * uy - h * ux)
        out.append((p, P, q, Q, f, G, r, R))
        if pl.cross(d, R) > 0:
            q, Q = r, R
        else:
            p, P = r, R
        f = G
    return out, off


@dataclass(frozen=True)
class SweepLoop:
    angle: float
    length: float
    curve: ClosedSurfaceCurve
    report: QuasigeodesicReport

    @property
    def is_q1(self) -> bool:
        return self.report.is_quasigeodesic and self.report.k == 1


@dataclass
class SweepResult:
    """Geodesic loops (and vertex-to-vertex geodesics) found from one vertex."""

    source: str
    resolution: float
    max_length: float
    loops: list[SweepLoop] = field(default_factory=list)
    geodesics: list[VertexGeodesic] = field(default_factory=list)
    rays: int = 0
    skipped: int = 0

    @property
    def q1(self) -> list[SweepLoop]:
        return [lp for lp in self.loops if lp.is_q1]

    def table(self) -> str:
        rows = [f"{'angle_deg':>12} {'length':>12} {'k':>3} verdict"]
        for lp in self.loops:
            rows.append(f"{math.degrees(lp.angle):12.6f} {lp.length:12.6g} {lp.report.k:3d} {lp.report.verdict}")
        return "\n".join(rows)


def _event_geodesic(tet: Tetrahedron, v: str, steps, k: int, off: float) -> VertexGeodesic:
    R = steps[k][7]
    target = steps[k][6]
    crossings, faces = [], [steps[0][4]]
    for p, P, q, Q, f, G, _, _ in steps[:k + 1]:
        hit = pl.seg_intersection((0.0, 0.0), R, P, Q)
        crossings.append(edge_point(p, q, hit[1], Tolerance(0.0)))
        faces.append(G)
    return VertexGeodesic(v, target, tuple(faces), tuple(crossings), pl.norm(R))


def sweep_loops(tet: Tetrahedron, v: str, resolution: float = 1e-4, max_length: float | None = None,
                max_steps: int = 512) -> SweepResult:
    """All geodesic loops at ``v`` up to ``max_length`` that the direction
    sweep resolves, each verified.

    ``max_length`` defaults to ten times the longest edge.
    """
    if resolution <= 0:
        raise ValueError("resolution must be positive")
    if max_length is None:
        max_length = 10.0 * tet.longest_edge
    geom = _geometry(tet, v)
    theta = tet.theta(v)
    n = int(math.ceil(theta / resolution))
    phis = (np.arange(n) + 0.5) * (theta / n)
    eta = min(resolution * 1e-3, 1e-7)
    res = SweepResult(v, resolution, max_length, rays=n)
    events: list[tuple[float, int]] = []

    def batch(arr):
        return kernels.trace_batch(*geom, np.asarray(arr, dtype=np.float64), max_length, max_steps)

    def bracket(lo: float, hi: float, k: int, depth: int):
        if depth > 200 or hi - lo <= 4 * eta:
            res.skipped += 1
            return
        if k == -2:
            s = int(np.searchsorted(geom[4], hi, side="right") - 1)
            star = float(geom[4][s])
        else:
            steps, off = ray_steps(tet, v, lo, k)
            R = steps[k][7]
            star = off + math.atan2(R[1], R[0])
            events.append((star, k))
        if not lo < star < hi:
            res.skipped += 1
            return
        for a, b in ((lo, star - eta), (star + eta, hi)):
            if b <= a:
                continue
            _, _, _, _, div = batch([a, b])
            if div[0] != -1:
                bracket(a, b, int(div[0]), depth + 1)

    _, _, _, _, div = batch(phis)
    for j in np.nonzero(div != -1)[0]:
        bracket(float(phis[j]), float(phis[j + 1]), int(div[j]), 0)

    events.sort()
    for star, k in events:
        steps, off = ray_steps(tet, v, star, k)
        g = _event_geodesic(tet, v, steps, k, off)
        if g.target != v:
            res.geodesics.append(g)
            continue
        curve = g.as_loop()
        if any(curves_equal(curve, lp.curve) for lp in res.loops):
            continue
        res.loops.append(SweepLoop(star, g.length, curve, verify(tet, curve)))
    return res


def sweep_all(tet: Tetrahedron, resolution: float = 1e-4, max_length: float | None = None) -> dict[str, SweepResult]:
    return {v: sweep_loops(tet, v, resolution, max_length) for v in VERTICES}


def verified_q1(results) -> list[SweepLoop]:
    """Distinct loops verifying as 1-vertex quasigeodesics across sweeps."""
    out: list[SweepLoop] = []
    for r in results.values() if isinstance(results, dict) else results:
        for lp in r.q1:
            if not any(curves_equal(lp.curve, o.curve) for o in out):
                out.append(lp)
    return out


__all__ = [
    "TraceState", "TraceResult", "trace", "SweepLoop", "SweepResult", "sweep_loops", "sweep_all",
    "verified_q1", "ray_steps",
]
