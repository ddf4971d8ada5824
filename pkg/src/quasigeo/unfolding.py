"""Planar developments: star unfoldings from a vertex, cut locus, visibility,
and face-sequence developments.

A face *placement* is a ``dict`` mapping the three vertex labels of a face
to planar points.  Every placement preserves the outward orientation, so a
face whose outward-counterclockwise cycle is ``p q r`` is counterclockwise
in the plane too.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from . import planar as pl
from .errors import InternalContradiction, NonAdjacentFaces, NumericalDegeneracy
from .tetra import Tetrahedron, edge_faces, edge_label, face_vertices

Placement = dict  # label -> (x, y)


def face_frame(tet: Tetrahedron, face: str) -> Placement:
    """Canonical placement of ``face``: its lowest label at the origin, its
    counterclockwise successor on the positive x-axis."""
    cyc = tet.cycle(face)
    i = cyc.index(min(cyc))
    p, q, r = cyc[i], cyc[(i + 1) % 3], cyc[(i + 2) % 3]
    P = (0.0, 0.0)
    Q = (tet.length(p, q), 0.0)
    R = pl.place_apex(P, Q, tet.angle(p, face), tet.length(p, r), left=True)
    return {p: P, q: Q, r: R}


def attach(tet: Tetrahedron, placed: Mapping[str, tuple], face: str) -> Placement:
    """Place ``face`` across the edge it shares with an already placed face."""
    shared = [v for v in face_vertices(face) if v in placed]
    if len(shared) != 2 or set(placed) == set(face_vertices(face)):
        raise NonAdjacentFaces(f"face {face} does not share exactly one edge with {''.join(placed)}")
    p, q = shared
    s = next(v for v in face_vertices(face) if v not in shared)
    P, Q = placed[p], placed[q]
    left = tet.ccw_next(face, p) == q
    S = pl.place_apex(P, Q, tet.angle(p, face), tet.length(p, s), left=left)
    return {p: P, q: Q, s: S}


def ccw_points(tet: Tetrahedron, face: str, placement: Mapping[str, tuple]):
    return [placement[v] for v in tet.cycle(face)]


# ---------------------------------------------------------------------------
# star unfolding
# ---------------------------------------------------------------------------

def image_name(source: str, opposite: str) -> str:
    """Name of the image of ``source`` lying in the face opposite ``opposite``."""
    return f"{source}_{opposite}"


@dataclass(frozen=True)
class StarUnfolding:
    """The four faces cut open along the three edges at ``source``.

    ``images[x]`` is the image of the source lying in the face opposite
    ``x`` (named ``source_x``).  ``boundary`` lists the six corners of the
    unfolding counterclockwise as ``(name, point)``.
    """

    tet: Tetrahedron
    source: str
    base: str
    face_placements: dict[str, Placement]
    images: dict[str, tuple[float, float]]
    boundary: tuple[tuple[str, tuple[float, float]], ...]

    @property
    def polygon(self) -> list[tuple[float, float]]:
        return [p for _, p in self.boundary]

    def corner_angles(self) -> dict[str, float]:
        pts = self.polygon
        n = len(pts)
        return {name: pl.interior_angle(pts[i - 1], pts[i], pts[(i + 1) % n])
                for i, (name, _) in enumerate(self.boundary)}

    def corner(self, name: str) -> tuple[float, float]:
        for n, p in self.boundary:
            if n == name:
                return p
        raise KeyError(name)

    def base_point(self, u: str) -> tuple[float, float]:
        """Position of a vertex of the base face."""
        return self.face_placements[self.base][u]

    def petal(self, x: str) -> str:
        """Face holding the image of the source opposite ``x``."""
        return x.upper()

    def walk(self, P, Q, start_face: str):
        """Follow the planar segment ``PQ`` through the face copies.

        Returns ``(crossings, end_face)`` where crossings are ``(u, w, t)``
        with ``t`` measured along ``u -> w``; ``None`` if the segment leaves
        the unfolding or runs through a vertex.
        """
        neighbors = {}
        for e in _face_edges(self.base):
            F = next(f for f in edge_faces(*e) if f != self.base)
            neighbors[(self.base, e)] = F
            neighbors[(F, e)] = self.base
        copies = {F: (F, pl_) for F, pl_ in self.face_placements.items()}
        return walk_segment(self.tet, copies, neighbors, start_face, P, Q)


def _face_edges(face: str):
    fv = face_vertices(face)
    return (edge_label(fv[0], fv[1]), edge_label(fv[0], fv[2]), edge_label(fv[1], fv[2]))


def star_unfold(tet: Tetrahedron, v: str) -> StarUnfolding:
    """Star unfolding of ``tet`` with respect to vertex ``v``.

    The face opposite ``v`` is placed with its lowest label at the origin
    and its next label on the positive x-axis; the three faces at ``v`` are
    attached along its edges.
    """
    base = v.upper()
    fv = face_vertices(base)
    p0, p1 = fv[0], fv[1]
    P0 = (0.0, 0.0)
    P1 = (tet.length(p0, p1), 0.0)
    p2 = fv[2]
    left = tet.ccw_next(base, p0) == p1
    P2 = pl.place_apex(P0, P1, tet.angle(p0, base), tet.length(p0, p2), left=left)
    base_pl = {p0: P0, p1: P1, p2: P2}
    placements = {base: base_pl}
    images = {}
    for x in fv:
        F = x.upper()
        placed = {u: base_pl[u] for u in fv if u != x}
        pl_F = attach(tet, placed, F)
        placements[F] = pl_F
        images[x] = pl_F[v]
    cyc = tet.cycle(base)
    boundary = []
    for i in range(3):
        u, w = cyc[i], cyc[(i + 1) % 3]
        x = cyc[(i + 2) % 3]
        boundary.append((u, base_pl[u]))
        boundary.append((image_name(v, x), images[x]))
    return StarUnfolding(tet, v, base, placements, images, tuple(boundary))


# ---------------------------------------------------------------------------
# cut locus
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CutLocus:
    """Ramification point ``y`` and its segments to the base vertices."""

    y: tuple[float, float]
    radius: float
    segments: dict[str, tuple[tuple[float, float], tuple[float, float]]]
    inside_base: bool


def cut_locus(su: StarUnfolding) -> CutLocus:
    """The point equidistant from the three source images, joined to the
    three vertices of the face opposite the source."""
    tet = su.tet
    L = tet.longest_edge
    imgs = [su.images[x] for x in sorted(su.images)]
    if abs(pl.orient(*imgs)) <= tet.tol.eps * L * L:
        raise NumericalDegeneracy("source images are collinear")
    y = pl.circumcenter(*imgs)
    if y is None:
        raise NumericalDegeneracy("source images are collinear")
    radius = pl.dist(y, imgs[0])
    base_pl = su.face_placements[su.base]
    tri = ccw_points(tet, su.base, base_pl)
    inside = pl.in_triangle(y, *tri, slack=tet.tol.eps * L)
    segs = {u: (y, base_pl[u]) for u in face_vertices(su.base)}
    return CutLocus(y, radius, segs, inside)


# ---------------------------------------------------------------------------
# visibility
# ---------------------------------------------------------------------------

def is_diagonal(poly: Sequence[tuple], i: int, j: int, slack: float, angle_slack: float) -> bool:
    """Whether the segment between polygon vertices ``i`` and ``j`` lies in the
    (counterclockwise) polygon and meets its boundary only at its endpoints."""
    n = len(poly)
    P, Q = poly[i], poly[j]
    for k in range(n):
        a, b = k, (k + 1) % n
        if a in (i, j) or b in (i, j):
            continue
        if pl.segment_distance(P, Q, poly[a], poly[b]) <= slack:
            return False
    for k, other in ((i, j), (j, i)):
        prev, cur, nxt = poly[k - 1], poly[k], poly[(k + 1) % n]
        inner = pl.interior_angle(prev, cur, nxt)
        d = pl.ccw_angle(pl.sub(nxt, cur), pl.sub(poly[other], cur))
        if not angle_slack < d < inner - angle_slack:
            return False
    return True


def visible_pairs(su: StarUnfolding) -> list[tuple[str, str]]:
    """Pairs ``(source_x, x)`` whose joining segment is a diagonal of the
    unfolding, ordered by ``x``."""
    tet = su.tet
    names = [n for n, _ in su.boundary]
    poly = su.polygon
    slack = tet.tol.eps * tet.longest_edge
    out = []
    for x in sorted(su.images):
        img = image_name(su.source, x)
        if is_diagonal(poly, names.index(img), names.index(x), slack, tet.tol.eps):
            out.append((img, x))
    return out


# ---------------------------------------------------------------------------
# face-sequence developments
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FaceSequenceDevelopment:
    tet: Tetrahedron
    faces: tuple[str, ...]
    placements: tuple[Placement, ...]

    def image(self, index: int, point) -> tuple[float, float]:
        """Planar image of a surface point lying on face copy ``index``."""
        from .curves import locate

        return locate(self.tet, self.faces[index], point, self.placements[index])


def develop(tet: Tetrahedron, faces: Sequence[str], seed: Mapping[str, tuple] | None = None,
            max_length: int = 64) -> FaceSequenceDevelopment:
    """Unfold a sequence of faces, each attached to the previous one."""
    faces = tuple(faces)
    if not faces:
        raise ValueError("empty face sequence")
    if len(faces) > max_length:
        raise ValueError(f"face sequence longer than {max_length}")
    first = dict(seed) if seed is not None else face_frame(tet, faces[0])
    if set(first) != set(face_vertices(faces[0])):
        raise ValueError("seed must place the vertices of the first face")
    pls = [first]
    for prev, F in zip(faces, faces[1:]):
        if F == prev or F not in "ABCD":
            raise NonAdjacentFaces(f"{prev} -> {F}")
        pls.append(attach(tet, pls[-1], F))
    return FaceSequenceDevelopment(tet, faces, tuple(pls))


# ---------------------------------------------------------------------------
# walking a planar segment through face copies
# ---------------------------------------------------------------------------

def walk_segment(tet: Tetrahedron, copies, neighbors, start, P, Q):
    """Follow ``PQ`` from copy ``start`` through glued face copies.

    ``copies`` maps a copy id to ``(face, placement)``; ``neighbors`` maps
    ``(copy id, edge label)`` to the copy glued along that edge.  Returns
    ``(crossings, end_copy)`` or ``None`` when the segment leaves the glued
    region or passes (within tolerance) through a vertex.
    """
    L = tet.longest_edge
    slack = tet.tol.eps * L
    seg_len = pl.dist(P, Q)
    if seg_len == 0.0:
        return [], start
    s_tiny = slack / seg_len
    cur, entry, s_cur = start, None, 0.0
    crossings = []
    for _ in range(256):
        face, place = copies[cur]
        best = None
        fv = face_vertices(face)
        for u, w in ((fv[0], fv[1]), (fv[0], fv[2]), (fv[1], fv[2])):
            e = u + w
            if e == entry:
                continue
            hit = pl.seg_intersection(P, Q, place[u], place[w])
            if hit is None:
                continue
            s, t = hit
            elen = pl.dist(place[u], place[w])
            if s <= s_cur + s_tiny or s >= 1.0 - s_tiny:
                continue
            if t < -slack / elen or t > 1.0 + slack / elen:
                continue
            if best is None or s < best[0]:
                best = (s, t, u, w, elen)
        if best is None:
            return crossings, cur
        s, t, u, w, elen = best
        if t * elen <= slack or (1.0 - t) * elen <= slack:
            return None
        nxt = neighbors.get((cur, u + w))
        if nxt is None:
            return None
        crossings.append((u, w, t))
        cur, entry, s_cur = nxt, u + w, s
    raise InternalContradiction("segment walk did not terminate")


def corner_angle_sum(su: StarUnfolding) -> float:
    return sum(su.corner_angles().values())


__all__ = [
    "StarUnfolding", "CutLocus", "FaceSequenceDevelopment", "star_unfold", "cut_locus",
    "visible_pairs", "develop", "face_frame", "attach", "image_name", "walk_segment",
    "is_diagonal", "corner_angle_sum",
]
