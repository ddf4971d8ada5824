"""SVG drawings of star unfoldings and Wavefront OBJ files of the solid,
both with curve overlays.  Output is a pure function of the inputs, so
repeated runs produce identical bytes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .curves import ClosedSurfaceCurve, lift, locate
from .errors import IoFailure
from .tetra import FACES, VERTICES, Tetrahedron
from .unfolding import StarUnfolding, cut_locus

KINDS = ("svg-unfolding", "obj-solid", "text-report", "json-report")
VIEWPORT = 1000.0
MARGIN = 0.05

_FACE_FILL = {"A": "#f2e6d9", "B": "#dde9f2", "C": "#e3f2dd", "D": "#eee0ef"}
_CURVE_COLORS = ("#c0392b", "#2471a3", "#1e8449", "#7d3c98", "#b9770e", "#17202a")


@dataclass(frozen=True)
class RenderSpec:
    """What to render and where.

    ``path`` of ``None`` means the caller only wants the text back.
    """

    kind: str = "svg-unfolding"
    path: str | None = None
    labels: bool = True
    cut_locus: bool = False
    curves: bool = True

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown output kind {self.kind!r}")


def write_text(text: str, path: str | None) -> str:
    if path is not None:
        try:
            with open(path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            raise IoFailure(f"cannot write {path}: {exc}") from exc
    return text


def _num(x: float) -> str:
    s = f"{x:.3f}"
    return "0.000" if s == "-0.000" else s


class _Frame:
    """Maps unfolding coordinates into the square viewport (y up)."""

    def __init__(self, points):
        xs = [p[0] for p in points]
        ys = [p[1] for p in points]
        self.x0, self.y1 = min(xs), max(ys)
        span = max(max(xs) - self.x0, self.y1 - min(ys))
        inner = VIEWPORT * (1.0 - 2.0 * MARGIN)
        self.s = inner / span if span > 0 else 1.0
        w = (max(xs) - self.x0) * self.s
        h = (self.y1 - min(ys)) * self.s
        self.ox = VIEWPORT * MARGIN + (inner - w) / 2.0
        self.oy = VIEWPORT * MARGIN + (inner - h) / 2.0

    def __call__(self, p) -> tuple[str, str]:
        return (_num(self.ox + (p[0] - self.x0) * self.s), _num(self.oy + (self.y1 - p[1]) * self.s))


def developed_segments(su: StarUnfolding, curve: ClosedSurfaceCurve):
    """Planar segments of ``curve`` drawn on the face copies of ``su``."""
    out = []
    for p, q, F in curve.segments():
        place = su.face_placements[F]
        out.append((locate(su.tet, F, p, place), locate(su.tet, F, q, place)))
    return out


def svg_unfolding(su: StarUnfolding, curves: Sequence[ClosedSurfaceCurve] = (),
                  spec: RenderSpec = RenderSpec()) -> str:
    """SVG 1.1 text of a star unfolding with optional overlays."""
    tet = su.tet
    pts = [p for place in su.face_placements.values() for p in place.values()]
    fr = _Frame(pts)
    size = _num(VIEWPORT)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<title>star unfolding from {su.source}</title>',
        '<g id="faces" stroke="#333333" stroke-width="1.5" stroke-linejoin="round">',
    ]
    for F in FACES:
        place = su.face_placements[F]
        coords = " ".join(",".join(fr(place[v])) for v in tet.cycle(F))
        out.append(f'<polygon id="face-{F}" points="{coords}" fill="{_FACE_FILL[F]}"/>')
    out.append("</g>")
    if spec.cut_locus:
        cl = cut_locus(su)
        out.append('<g id="cut-locus" stroke="#555555" stroke-width="1" stroke-dasharray="6,4">')
        for u in sorted(cl.segments):
            (x1, y1), (x2, y2) = (fr(p) for p in cl.segments[u])
            out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
        out.append("</g>")
    if spec.curves and curves:
        out.append('<g id="curves" fill="none" stroke-width="3" stroke-linecap="round">')
        for k, curve in enumerate(curves):
            color = _CURVE_COLORS[k % len(_CURVE_COLORS)]
            out.append(f'<g id="curve-{k}" stroke="{color}">')
            for P, Q in developed_segments(su, curve):
                (x1, y1), (x2, y2) = fr(P), fr(Q)
                out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
            out.append("</g>")
        out.append("</g>")
    if spec.labels:
        out.append('<g id="labels" font-family="sans-serif" font-size="22" text-anchor="middle">')
        for name, p in su.boundary:
            x, y = fr(p)
            out.append(f'<text x="{x}" y="{y}" dy="-6">{name}</text>')
        for F in FACES:
            place = su.face_placements[F]
            c = tuple(sum(q[i] for q in place.values()) / 3.0 for i in range(2))
            x, y = fr(c)
            out.append(f'<text x="{x}" y="{y}" fill="#777777">{F}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def export_svg(su: StarUnfolding, curves: Sequence[ClosedSurfaceCurve] = (),
               spec: RenderSpec = RenderSpec()) -> str:
    """Render :func:`svg_unfolding` and write it to ``spec.path`` if set."""
    if spec.kind != "svg-unfolding":
        raise ValueError("export_svg needs an svg-unfolding render spec")
    return write_text(svg_unfolding(su, curves, spec), spec.path)


def _fmt3(p) -> str:
    return " ".join(f"{x:.12g}" if x != 0 else "0" for x in p)


def obj_solid(tet: Tetrahedron, curves: Sequence[ClosedSurfaceCurve] = ()) -> str:
    """OBJ text: the four vertices, the four outward faces, then one closed
    polyline per curve through its lifted points."""
    out = []
    for v in VERTICES:
        out.append(f"v {_fmt3(tet.point(v))}")
    for F in FACES:
        out.append("f " + " ".join(str(VERTICES.index(v) + 1) for v in tet.cycle(F)))
    n = 4
    for curve in curves:
        idx = []
        for p in curve.points:
            out.append(f"v {_fmt3(lift(tet, p))}")
            n += 1
            idx.append(n)
        out.append("l " + " ".join(str(i) for i in idx + idx[:1]))
    return "\n".join(out) + "\n"


def export_obj(tet: Tetrahedron, curves: Sequence[ClosedSurfaceCurve] = (),
               spec: RenderSpec = RenderSpec("obj-solid")) -> str:
    if spec.kind != "obj-solid":
        raise ValueError("export_obj needs an obj-solid render spec")
    return write_text(obj_solid(tet, curves if spec.curves else ()), spec.path)


__all__ = ["RenderSpec", "export_svg", "export_obj", "svg_unfolding", "obj_solid",
           "developed_segments", "write_text", "KINDS"]
