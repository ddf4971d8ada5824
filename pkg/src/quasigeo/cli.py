"""Command-line interface.

Input is a JSON document with either ``vertices`` (``{"a": [x, y, z], ...}``)
or ``angles`` (``{"aB": degrees, ...}``) and optional ``settings``
(``epsilon``, ``allow_flat``, ``depth_bound``, ``resolution``).

Exit codes: 0 success, 1 domain error, 2 malformed input, 3 internal
contradiction.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass
from typing import Any

from . import __version__
from .construct import (
    PARTITIONS, NoQ1Isosceles, construct_q1, construct_q2, construct_q3, construct_q4,
    enumerate_all, failing_faces, q4_side_sums,
)
from .curves import (
    NOT_QUASIGEODESIC, ClosedSurfaceCurve, EdgeCrossing, FaceInterior, MalformedCurve,
    SurfacePoint, VertexAnchor, edge_point, format_curve, parse_curve, verify,
)
from .errors import InputError, InternalContradiction, NonRealizable, QuasigeoError
from .export import RenderSpec, export_obj, export_svg, write_text
from .oracle import sweep_loops, trace, verified_q1
from .tetra import (
    ANGLE_KEYS, FACES, VERTICES, AngleTable, Tetrahedron, Tolerance,
    acute_endpoint_of_longest_edge, check_angle_table, classify, vertex_faces,
)
from .unfolding import cut_locus, star_unfold, visible_pairs

EXIT_OK, EXIT_DOMAIN, EXIT_INPUT, EXIT_CONTRADICTION = 0, 1, 2, 3


class UsageError(Exception):
    """Bad command-line usage (exit 2)."""


# ---------------------------------------------------------------------------
# input
# ---------------------------------------------------------------------------

@dataclass
class InputDocument:
    vertices: dict[str, tuple[float, float, float]] | None
    angles: dict[str, float] | None  # degrees
    epsilon: float
    allow_flat: bool
    depth_bound: int
    resolution: float

    @property
    def tol(self) -> Tolerance:
        return Tolerance(self.epsilon)

    def tetrahedron(self, command: str) -> Tetrahedron:
        if self.vertices is None:
            raise NonRealizable(
                f"'{command}' needs vertex coordinates; twelve face angles need not be "
                "realizable as a tetrahedron in 3-space")
        return Tetrahedron.from_mapping(self.vertices, allow_flat=self.allow_flat, tol=self.tol)

    def solid(self, command: str) -> Tetrahedron | AngleTable:
        """Tetrahedron when coordinates are given, else the checked angle table."""
        if self.vertices is not None:
            return self.tetrahedron(command)
        table = AngleTable.from_degrees(self.angles)
        check_angle_table(table, self.allow_flat, self.tol, sum_tol=max(self.epsilon, 1e-9))
        return table


def default_epsilon() -> float:
    raw = os.environ.get("QUASIGEO_EPS")
    if raw is None or raw == "":
        return Tolerance().eps
    try:
        eps = float(raw)
    except ValueError as exc:
        raise InputError(f"QUASIGEO_EPS={raw!r} is not a number") from exc
    if not eps > 0 or not math.isfinite(eps):
        raise InputError("QUASIGEO_EPS must be positive")
    return eps


def _number(x, what: str) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise InputError(f"{what} must be a number")
    x = float(x)
    if not math.isfinite(x):
        raise InputError(f"{what} must be finite")
    return x


def parse_document(text: str, eps_override: float | None = None) -> InputDocument:
    """Parse and check the JSON input document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"input is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InputError("input must be a JSON object")
    unknown = set(doc) - {"vertices", "angles", "settings"}
    if unknown:
        raise InputError(f"unknown keys: {', '.join(sorted(unknown))}")
    has_v, has_a = "vertices" in doc, "angles" in doc
    if has_v == has_a:
        raise InputError("give exactly one of 'vertices' or 'angles'")
    settings = doc.get("settings", {})
    if not isinstance(settings, dict):
        raise InputError("'settings' must be an object")
    extra = set(settings) - {"epsilon", "allow_flat", "depth_bound", "resolution"}
    if extra:
        raise InputError(f"unknown settings: {', '.join(sorted(extra))}")
    eps = default_epsilon()
    if "epsilon" in settings:
        eps = _number(settings["epsilon"], "epsilon")
    if eps_override is not None:
        eps = eps_override
    if not eps > 0:
        raise InputError("epsilon must be positive")
    allow_flat = settings.get("allow_flat", False)
    if not isinstance(allow_flat, bool):
        raise InputError("allow_flat must be true or false")
    depth = settings.get("depth_bound", 8)
    if isinstance(depth, bool) or not isinstance(depth, int) or depth < 1:
        raise InputError("depth_bound must be a positive integer")
    res = _number(settings.get("resolution", 1e-4), "resolution")
    if not res > 0:
        raise InputError("resolution must be positive")

    vertices = angles = None
    if has_v:
        raw = doc["vertices"]
        if not isinstance(raw, dict) or set(raw) != set(VERTICES):
            raise InputError("'vertices' must map exactly a, b, c, d to coordinates")
        vertices = {}
        for v in VERTICES:
            p = raw[v]
            if not isinstance(p, list) or len(p) != 3:
                raise InputError(f"vertex {v} needs 3 coordinates")
            vertices[v] = tuple(_number(x, f"coordinate of {v}") for x in p)
    else:
        raw = doc["angles"]
        if not isinstance(raw, dict) or set(raw) != set(ANGLE_KEYS):
            raise InputError("'angles' must give all 12 vertex-face entries (aB, aC, aD, bA, ...)")
        angles = {k: _number(raw[k], f"angle {k}") for k in ANGLE_KEYS}
    return InputDocument(vertices, angles, eps, allow_flat, depth, res)


def read_document(path: str, eps_override: float | None = None) -> InputDocument:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    return parse_document(text, eps_override)


def parse_point(text: str) -> SurfacePoint:
    """``a``, ``ab:0.25`` or ``D[0.2,0.3,0.5]``."""
    s = text.strip()
    if len(s) == 1 and s in VERTICES:
        return VertexAnchor(s)
    if len(s) > 3 and s[2] == ":" and s[0] in VERTICES and s[1] in VERTICES and s[0] != s[1]:
        try:
            return edge_point(s[0], s[1], float(s[3:]), Tolerance(0.0))
        except ValueError as exc:
            raise MalformedCurve(f"bad edge parameter in {text!r}") from exc
    if len(s) > 3 and s[0] in FACES and s[1] == "[" and s[-1] == "]":
        try:
            w = tuple(float(x) for x in s[2:-1].split(","))
        except ValueError as exc:
            raise MalformedCurve(f"bad barycentric coordinates in {text!r}") from exc
        if len(w) != 3:
            raise MalformedCurve("barycentric coordinates need 3 numbers")
        return FaceInterior(s[0], w)
    raise MalformedCurve(f"cannot parse surface point {text!r}")


# ---------------------------------------------------------------------------
# formatting
# ---------------------------------------------------------------------------

def fdeg(x: float) -> str:
    return f"{math.degrees(x):.2f}"


def flen(x: float) -> str:
    return f"{x:.6g}"


def jdeg(x: float) -> float:
    return float(fdeg(x))


def jlen(x: float) -> float:
    return float(flen(x))


class Report:
    """Collects text lines and a JSON record side by side."""

    def __init__(self, command: str):
        self.lines: list[str] = []
        self.data: dict[str, Any] = {"command": command}

    def line(self, s: str = "") -> None:
        self.lines.append(s)

    def render(self, as_json: bool) -> str:
        if as_json:
            return json.dumps(self.data, indent=2, sort_keys=True) + "\n"
        return "\n".join(self.lines) + "\n"


def _angles_block(rep: Report, solid) -> None:
    table = solid.angles if isinstance(solid, Tetrahedron) else solid
    rep.data["angles_deg"] = {k: jdeg(table[k]) for k in ANGLE_KEYS}
    rep.line("face angles (deg):")
    for v in VERTICES:
        rep.line("  " + "  ".join(f"{v}{F}={fdeg(table[v + F]):>7}" for F in vertex_faces(v)))


def _verification(rep: Report, tet: Tetrahedron, curve: ClosedSurfaceCurve, key: str = "verification"):
    r = verify(tet, curve)
    rec: dict[str, Any] = {
        "verdict": r.verdict, "k": r.k, "simple": r.simple,
        "side_angles_deg": {v: [jdeg(a), jdeg(b)] for v, (a, b) in sorted(r.angles.items())},
        "max_straightness_residual": float(f"{r.max_residual:.3g}"),
    }
    rep.line(f"  verdict: {r.verdict} (k={r.k}, simple={'yes' if r.simple else 'no'})")
    for v, (a, b) in sorted(r.angles.items()):
        rep.line(f"  at {v}: left {fdeg(a)} deg, right {fdeg(b)} deg")
    if r.curvature_left is not None:
        gl, gr = r.gauss_bonnet_residuals()
        rec["gauss_bonnet_residual"] = [float(f"{gl:.3g}"), float(f"{gr:.3g}")]
        rec["left_vertices"] = list(r.left_vertices)
        rec["right_vertices"] = list(r.right_vertices)
        rep.line(f"  sides: left {{{','.join(r.left_vertices)}}}, right {{{','.join(r.right_vertices)}}}; "
                 f"Gauss-Bonnet residual {gl:.3g}, {gr:.3g}")
    rep.data[key] = rec
    return r


def _curve_record(curve: ClosedSurfaceCurve) -> str:
    return format_curve(curve)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_validate(doc: InputDocument, args, rep: Report):
    if doc.vertices is not None:
        tet = doc.tetrahedron("validate")
        r = tet.report
        rep.data.update({
            "mode": "coordinates", "valid": r.ok, "volume": jlen(abs(r.volume)), "flat": r.flat,
            "longest_edge": jlen(r.longest_edge),
            "face_areas": {F: jlen(a) for F, a in sorted(r.face_areas.items())},
            "vertex_triangle_inequalities": dict(sorted(r.triangle_inequalities.items())),
        })
        rep.line(f"valid: {'yes' if r.ok else 'no'}")
        rep.line(f"volume: {flen(abs(r.volume))}  longest edge: {flen(r.longest_edge)}  flat: {'yes' if r.flat else 'no'}")
        rep.line("face areas: " + "  ".join(f"{F}={flen(a)}" for F, a in sorted(r.face_areas.items())))
        _angles_block(rep, tet)
        total = sum(tet.curvature(v) for v in VERTICES)
        rep.data["total_curvature_deg"] = jdeg(total)
        rep.line(f"total curvature: {fdeg(total)} deg")
        return EXIT_OK if r.ok else EXIT_INPUT
    table = doc.solid("validate")
    rep.data.update({"mode": "angles", "valid": True})
    rep.line("valid: yes (angle table: face sums and vertex triangle inequalities hold)")
    _angles_block(rep, table)
    return EXIT_OK


def cmd_classify(doc: InputDocument, args, rep: Report):
    solid = doc.solid("classify")
    c = classify(solid, doc.tol)
    rep.data.update({
        "curvatures_deg": {v: jdeg(c.curvatures[v]) for v in VERTICES},
        "complete_angles_deg": {v: jdeg(c.complete_angles[v]) for v in VERTICES},
        "isosceles": c.is_isosceles, "pointed_at": c.pointed_at,
        "high_curvature_count": c.high_curvature_count, "f_acute": c.is_f_acute,
    })
    rep.line("curvatures (deg): " + "  ".join(f"{v}={fdeg(c.curvatures[v])}" for v in VERTICES))
    rep.line(f"isosceles: {'yes' if c.is_isosceles else 'no'}")
    rep.line(f"pointed at: {c.pointed_at or 'none'}")
    rep.line(f"vertices with curvature above 180 deg: {c.high_curvature_count}")
    rep.line(f"f-acute: {'yes' if c.is_f_acute else 'no'}")
    if isinstance(solid, Tetrahedron):
        v = acute_endpoint_of_longest_edge(solid)
        rep.data["acute_endpoint_of_longest_edge"] = v
        rep.line(f"acute endpoint of longest edge: {v}")
    if args.emit_angles:
        table = solid.angles if isinstance(solid, Tetrahedron) else solid
        doc_out = {"angles": {k: math.degrees(table[k]) for k in ANGLE_KEYS}}
        if args.emit_angles == "-":
            rep.data["angle_document"] = doc_out
            rep.line(json.dumps(doc_out, sort_keys=True))
        else:
            write_text(json.dumps(doc_out, indent=2, sort_keys=True) + "\n", args.emit_angles)
    return EXIT_OK


def cmd_q1(doc: InputDocument, args, rep: Report):
    tet = doc.tetrahedron("q1")
    try:
        curve, tr = construct_q1(tet)
    except NoQ1Isosceles:
        rep.data.update({"found": False, "reason": "isosceles"})
        rep.line("no 1-vertex quasigeodesic (isosceles): every vertex has curvature 180 deg")
        return EXIT_OK
    rep.data.update({"found": True, "curve": _curve_record(curve), "case": tr.case,
                     "trace": _jsonable(tr.as_record())})
    rep.line(f"Q1 ({tr.case}): {format_curve(curve)}")
    for ln in tr.as_text().splitlines()[1:]:
        rep.line("  " + ln.strip())
    _verification(rep, tet, curve)
    args._curves = [curve]
    args._vertex = args._vertex or tr.unfolding.source
    return EXIT_OK


def cmd_q2(doc: InputDocument, args, rep: Report):
    tet = doc.tetrahedron("q2")
    curve, tr = construct_q2(tet)
    rep.data.update({"curve": _curve_record(curve), "case": tr.case, "trace": _jsonable(tr.as_record())})
    rep.line(f"Q2 ({tr.case}): {format_curve(curve)}")
    _verification(rep, tet, curve)
    args._curves = [curve]
    return EXIT_OK


def cmd_q3(doc: InputDocument, args, rep: Report):
    solid = doc.solid("q3")
    F, curve = construct_q3(solid, doc.tol)
    fails = failing_faces(solid, doc.tol)
    rep.data.update({"face": F, "failing": {G: fails[G] for G in FACES}})
    rep.line(f"Q3: boundary of face {F}")
    for G in FACES:
        status = "fails at " + ",".join(fails[G]) if fails[G] else "does not fail"
        rep.line(f"  face {G}: {status}")
    _angles_block(rep, solid)
    if isinstance(solid, Tetrahedron):
        args._curves = [curve]
    return EXIT_OK


def cmd_q4(doc: InputDocument, args, rep: Report):
    solid = doc.solid("q4")
    parts = [args.partition] if args.partition else list(PARTITIONS)
    recs = {}
    curves = []
    for P in parts:
        out = construct_q4(solid, P, doc.tol)
        sums = q4_side_sums(solid, P)
        ok = out != NOT_QUASIGEODESIC
        recs[P] = {"quasigeodesic": ok,
                   "side_sums_deg": {v: [jdeg(a), jdeg(b)] for v, (a, b) in sums.items()}}
        rep.line(f"Q4 {P}: {'yes' if ok else 'no (' + NOT_QUASIGEODESIC + ')'}")
        rep.line("  " + "  ".join(f"{v}: {fdeg(a)}/{fdeg(b)}" for v, (a, b) in sums.items()))
        if ok:
            curves.append(out)
    rep.data["partitions"] = recs
    if isinstance(solid, Tetrahedron):
        args._curves = curves
    return EXIT_OK


def cmd_enumerate(doc: InputDocument, args, rep: Report):
    tet = doc.tetrahedron("enumerate")
    depth = args.depth or doc.depth_bound
    res = enumerate_all(tet, depth)
    counts = res.counts()
    rep.data.update({"counts": counts, "depth_bound": depth,
                     "curves": [[kind, _curve_record(c)] for kind, c in res.all_curves()]})
    rep.line(f"Q1: {counts['q1']}  Q2: {counts['q2_nondegenerate']} + {counts['q2_degenerate']} degenerate  "
             f"Q3: {counts['q3']}  Q4: {counts['q4']}  total: {counts['total']}")
    for kind, c in res.all_curves():
        rep.line(f"  {kind}: {format_curve(c)}")
    args._curves = [c for _, c in res.all_curves()]
    return EXIT_OK


def cmd_verify(doc: InputDocument, args, rep: Report):
    tet = doc.tetrahedron("verify")
    curve = parse_curve(args.curve)
    rep.data["curve"] = _curve_record(curve)
    rep.line(f"curve: {format_curve(curve)}")
    _verification(rep, tet, curve)
    args._curves = [curve]
    return EXIT_OK


def cmd_unfold(doc: InputDocument, args, rep: Report):
    tet = doc.tetrahedron("unfold")
    v = args.vertex or "a"
    su = star_unfold(tet, v)
    corners = su.corner_angles()
    rep.data.update({
        "source": v,
        "boundary": [[n, [jlen(p[0]), jlen(p[1])]] for n, p in su.boundary],
        "corner_angles_deg": {n: jdeg(a) for n, a in corners.items()},
        "visible_pairs": [list(p) for p in visible_pairs(su)],
    })
    rep.line(f"star unfolding from {v}")
    for n, p in su.boundary:
        rep.line(f"  {n:>4}: ({flen(p[0])}, {flen(p[1])})  corner {fdeg(corners[n])} deg")
    try:
        cl = cut_locus(su)
    except QuasigeoError as exc:
        rep.line(f"  cut locus: unavailable ({exc})")
    else:
        rep.data["cut_locus"] = {"y": [jlen(cl.y[0]), jlen(cl.y[1])], "radius": jlen(cl.radius),
                                 "inside_base": cl.inside_base}
        rep.line(f"  cut locus point: ({flen(cl.y[0])}, {flen(cl.y[1])}), radius {flen(cl.radius)}")
    rep.line("  visible pairs: " + (", ".join(f"{a}-{b}" for a, b in visible_pairs(su)) or "none"))
    args._curves = [parse_curve(t) for t in args.curve or ()]
    args._vertex = v
    return EXIT_OK


def cmd_trace(doc: InputDocument, args, rep: Report):
    tet = doc.tetrahedron("trace")
    start = parse_point(args.start)
    max_len = args.max_length if args.max_length is not None else 10.0 * tet.longest_edge
    res = trace(tet, start, math.radians(args.direction), max_len)
    rep.data.update({"termination": res.termination, "length": jlen(res.length),
                     "crossings": len(res.path) - 1, "vertex": res.vertex,
                     "path": [str(p) for p in res.path]})
    rep.line(f"trace: {res.termination}" + (f" at {res.vertex}" if res.vertex else "")
             + f", length {flen(res.length)}, {max(len(res.path) - 1, 0)} steps")
    for p, F in zip(res.path, res.faces):
        rep.line(f"  {p} ({F})")
    try:
        curve = res.curve()
    except MalformedCurve:
        return EXIT_OK
    rep.data["curve"] = _curve_record(curve)
    rep.line(f"closed: {format_curve(curve)}")
    _verification(rep, tet, curve)
    args._curves = [curve]
    return EXIT_OK


def cmd_sweep(doc: InputDocument, args, rep: Report):
    tet = doc.tetrahedron("sweep")
    res_ = args.resolution or doc.resolution
    verts = [args.vertex] if args.vertex else list(VERTICES)
    results = {v: sweep_loops(tet, v, res_, args.max_length) for v in verts}
    q1 = verified_q1(results)
    rep.data.update({
        "resolution": res_,
        "sources": {v: {"loops": [{"angle_deg": float(f"{math.degrees(lp.angle):.6f}"),
                                   "length": jlen(lp.length), "k": lp.report.k,
                                   "verdict": lp.report.verdict, "curve": _curve_record(lp.curve)}
                                  for lp in r.loops],
                        "rays": r.rays} for v, r in results.items()},
        "verified_q1": [_curve_record(lp.curve) for lp in q1],
    })
    for v, r in results.items():
        rep.line(f"sweep from {v}: {r.rays} rays, {len(r.loops)} loops, {len(r.q1)} verified Q1")
        rep.line(r.table())
    rep.line(f"distinct verified Q1: {len(q1)}")
    for lp in q1:
        rep.line(f"  {format_curve(lp.curve)}")
    args._curves = [lp.curve for lp in q1]
    return EXIT_OK


COMMANDS = {
    "validate": cmd_validate, "classify": cmd_classify, "q1": cmd_q1, "q2": cmd_q2,
    "q3": cmd_q3, "q4": cmd_q4, "enumerate": cmd_enumerate, "verify": cmd_verify,
    "unfold": cmd_unfold, "trace": cmd_trace, "sweep": cmd_sweep,
}


def _jsonable(x):
    if isinstance(x, float):
        return float(f"{x:.12g}")
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="quasigeo", description="Simple closed quasigeodesics on tetrahedra.")
    p.add_argument("--version", action="version", version=f"quasigeo {__version__}")
    sub = p.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True

    def add(name, help_, files=True, vertex_help="unfolding source for --svg"):
        s = sub.add_parser(name, help=help_)
        s.add_argument("input", help="JSON input document, '-' for stdin")
        s.add_argument("--json", action="store_true", help="machine-readable report")
        s.add_argument("--eps", type=float, help="tolerance (overrides settings and QUASIGEO_EPS)")
        if files:
            s.add_argument("--svg", metavar="PATH", help="write the star unfolding with curves as SVG")
            s.add_argument("--obj", metavar="PATH", help="write the solid with curves as OBJ")
            s.add_argument("--vertex", choices=list(VERTICES), help=vertex_help)
            s.add_argument("--cut-locus", action="store_true", help="draw the cut locus in --svg")
            s.add_argument("--no-labels", action="store_true", help="omit labels in --svg")
        return s

    add("validate", "check the input tetrahedron", files=False)
    s = add("classify", "curvatures and shape flags", files=False)
    s.add_argument("--emit-angles", metavar="PATH",
                   help="write the twelve face angles as an angle-mode input ('-' to report)")
    add("q1", "1-vertex quasigeodesic by case analysis")
    add("q2", "2-vertex quasigeodesic")
    add("q3", "face boundary quasigeodesic")
    s = add("q4", "4-vertex partition quasigeodesics")
    s.add_argument("--partition", choices=list(PARTITIONS))
    s = add("enumerate", "all quasigeodesics of the searched shapes")
    s.add_argument("--depth", type=int, help="face-sequence depth bound")
    s = add("verify", "verify a curve given as text")
    s.add_argument("--curve", required=True, help="e.g. 'a (D) bc:0.25 (A) cd:0.5 (B)'")
    s = add("unfold", "star unfolding from a vertex", vertex_help="source vertex (default: a)")
    s.add_argument("--curve", action="append", help="curve text to overlay (repeatable)")
    s = add("trace", "trace a straight line on the surface")
    s.add_argument("--start", required=True, help="'a', 'ab:0.5' or 'D[0.2,0.3,0.5]'")
    s.add_argument("--direction", type=float, required=True, help="fan direction in degrees")
    s.add_argument("--max-length", type=float)
    s = add("sweep", "search geodesic loops by direction sweep",
            vertex_help="source vertex (default: all; also the --svg source)")
    s.add_argument("--resolution", type=float, help="angular step in radians")
    s.add_argument("--max-length", type=float)
    return p


def _exports(doc: InputDocument, args) -> None:
    curves = getattr(args, "_curves", [])
    if getattr(args, "svg", None):
        tet = doc.tetrahedron(args.command)
        v = getattr(args, "_vertex", None) or "a"
        spec = RenderSpec("svg-unfolding", args.svg, labels=not args.no_labels, cut_locus=args.cut_locus)
        export_svg(star_unfold(tet, v), curves, spec)
    if getattr(args, "obj", None):
        tet = doc.tetrahedron(args.command)
        export_obj(tet, curves, RenderSpec("obj-solid", args.obj))


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    """Parse ``argv``, dispatch, print the report; returns the exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"quasigeo: error: {exc}", file=stderr)
        return EXIT_INPUT
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    rep = Report(args.command)
    try:
        if getattr(args, "svg", None) and getattr(args, "obj", None):
            raise UsageError("choose one of --svg or --obj")
        if args.command in ("trace", "sweep") and args.max_length is not None and args.max_length < 0:
            raise UsageError("--max-length must be non-negative")
        doc = read_document(args.input, args.eps)
        args._curves = []
        args._vertex = getattr(args, "vertex", None)
        code = COMMANDS[args.command](doc, args, rep)
        _exports(doc, args)
    except (UsageError, InputError, MalformedCurve) as exc:
        print(f"quasigeo: input error: {exc}", file=stderr)
        return EXIT_INPUT
    except InternalContradiction as exc:
        print(f"quasigeo: internal contradiction: {exc}", file=stderr)
        return EXIT_CONTRADICTION
    except QuasigeoError as exc:
        print(f"quasigeo: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_DOMAIN
    stdout.write(rep.render(args.json))
    return code


def main(argv: list[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
