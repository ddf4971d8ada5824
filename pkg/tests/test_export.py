import hashlib
import re

import pytest

from fixtures import CASE_1, one_q3, pointed_one_q1, regular
from quasigeo.construct import construct_q1
from quasigeo.curves import face_boundary, parse_curve
from quasigeo.errors import IoFailure
from quasigeo.export import RenderSpec, developed_segments, export_obj, export_svg, obj_solid, svg_unfolding
from quasigeo.tetra import Tetrahedron
from quasigeo.unfolding import star_unfold


def _pointed_svg():
    t = pointed_one_q1()
    curve, tr = construct_q1(t)
    return svg_unfolding(tr.unfolding, [curve], RenderSpec(cut_locus=True))


def test_svg_structure():
    text = _pointed_svg()
    assert text.startswith("<?xml")
    assert text.count("<polygon") == 4
    assert text.count("<line") >= 3
    assert "stroke-dasharray" in text


def test_svg_without_curves_or_labels():
    su = star_unfold(regular(), "a")
    text = svg_unfolding(su, [], RenderSpec(labels=False))
    assert text.count("<polygon") == 4 and "<line" not in text and "<text" not in text


def test_svg_deterministic():
    assert _pointed_svg() == _pointed_svg()
    # frozen from this implementation
    digest = hashlib.sha256(_pointed_svg().encode()).hexdigest()
    assert digest == GOLDEN_SVG


GOLDEN_SVG = "729a8025ab8b831102536c17583d5324972dc77ae11cb1eddc21e9bd681f142a"


def test_svg_coordinates_in_viewport():
    nums = [float(x) for x in re.findall(r'\b[xy]\d?="(-?[\d.]+)"', _pointed_svg())]
    assert nums and min(nums) >= 0 and max(nums) <= 1000


def test_developed_segments_count():
    t = Tetrahedron(CASE_1)
    curve, tr = construct_q1(t)
    assert len(developed_segments(tr.unfolding, curve)) == len(curve.faces)


def test_obj_solid():
    t = one_q3()
    text = obj_solid(t)
    lines = text.splitlines()
    assert sum(l.startswith("v ") for l in lines) == 4
    assert sum(l.startswith("f ") for l in lines) == 4
    assert not any(l.startswith("l ") for l in lines)


def test_obj_q3_boundary():
    t = one_q3()
    text = obj_solid(t, [face_boundary(t, "C")])
    (l,) = [x for x in text.splitlines() if x.startswith("l ")]
    idx = l.split()[1:]
    # three segments, closed back to the first point
    assert len(idx) == 4 and idx[0] == idx[-1]


def test_obj_q1_loop_closed():
    t = Tetrahedron(CASE_1)
    curve, _ = construct_q1(t)
    text = obj_solid(t, [curve])
    (l,) = [x for x in text.splitlines() if x.startswith("l ")]
    idx = l.split()[1:]
    assert idx[0] == idx[-1] and len(idx) == len(curve.points) + 1
    pts = [x for x in text.splitlines() if x.startswith("v ")]
    assert pts[4] == "v " + " ".join(f"{c:.12g}" for c in t.point(curve.anchors[0]))


def test_export_writes_files(tmp_path):
    t = regular()
    path = tmp_path / "r.obj"
    text = export_obj(t, [parse_curve("ac:0.5 (D) bc:0.5 (A) bd:0.5 (C) ad:0.5 (B)")],
                      RenderSpec("obj-solid", str(path)))
    assert path.read_text() == text
    svg = tmp_path / "r.svg"
    export_svg(star_unfold(t, "a"), [], RenderSpec("svg-unfolding", str(svg)))
    assert svg.read_text().count("<polygon") == 4


def test_export_errors(tmp_path):
    with pytest.raises(IoFailure):
        export_obj(regular(), [], RenderSpec("obj-solid", str(tmp_path / "missing" / "x.obj")))
    with pytest.raises(ValueError):
        export_svg(star_unfold(regular(), "a"), [], RenderSpec("obj-solid"))
    with pytest.raises(ValueError):
        RenderSpec("png")
