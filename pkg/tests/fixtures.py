"""Shared fixtures.  Values marked derived come from
``scripts/derive_fixtures.py`` and are frozen here."""

from __future__ import annotations

import math

from quasigeo.tetra import Tetrahedron, isosceles_tetrahedron, regular_tetrahedron

ONE_Q3 = [(-3.54, 1.98, 4.58), (0.0, 0.0, 0.0), (1.0, 0.0, 0.0), (4.91, 3.24, 0.0)]
POINTED_ONE_Q1 = [(-0.65, 0.0, 1.56), (0.0, 0.0, 0.0), (1.0, 0.0, 0.0), (0.89, 0.25, 0.0)]

# derived: apex height giving curvature 142 deg at the apex of the unit-base pyramid
NEAR_REGULAR_H = 0.6155051981367545

# derived: realizations of the case-analysis curvature tuples (deg at a, b, c, d)
CASE_1 = [(-1.6893, 5.839, 2.8132), (0.0, 0.0, 0.0), (1.0, 0.0, 0.0), (0.8085, 4.1671, 0.0)]
CASE_2_1 = [(0.1594, 0.6802, 0.6014), (0.0, 0.0, 0.0), (1.0, 0.0, 0.0), (1.0472, 0.688, 0.0)]
CASE_2_2_2 = [(1.7527, 3.0493, 1.41), (0.0, 0.0, 0.0), (1.0, 0.0, 0.0), (1.1584, 3.0234, 0.0)]
CASE_2_2_3 = [(3.689, 1.0201, 2.0267), (0.0, 0.0, 0.0), (1.0, 0.0, 0.0), (0.8091, 2.1745, 0.0)]
# derived: random search hits
CASE_2_2_1 = [(-0.22, -1.24, -0.71), (-1.68, 0.54, 1.21), (-1.16, -1.26, 0.11), (0.79, 0.47, 0.83)]
ONE_VISIBLE = [(0.92, 1.53, 0.27), (-1.26, -1.09, -0.02), (-1.32, -1.3, 1.38), (-1.36, -1.44, 1.03)]
OBTUSE_Q4 = [(-1.15, -1.19, -1.8), (-1.13, 0.4, 1.54), (-0.6, -0.53, -0.33), (0.72, 1.14, 1.76)]

CASE_CURVATURES = {
    "Case 1": (CASE_1, (282, 140, 173, 124)),
    "Case 2.1": (CASE_2_1, (196, 190, 159, 175)),
    "Case 2.2.2": (CASE_2_2_2, (226, 205, 138, 151)),
    "Case 2.2.3": (CASE_2_2_3, (284, 200, 58, 178)),
}


def near_regular_points(h: float = NEAR_REGULAR_H):
    R = 1.0 / math.sqrt(3.0)
    base = [(R * math.cos(t), R * math.sin(t), 0.0) for t in (0.0, 2 * math.pi / 3, 4 * math.pi / 3)]
    return [(0.0, 0.0, h)] + base


def near_regular() -> Tetrahedron:
    return Tetrahedron(near_regular_points())


def one_q3() -> Tetrahedron:
    return Tetrahedron(ONE_Q3)


def pointed_one_q1() -> Tetrahedron:
    return Tetrahedron(POINTED_ONE_Q1)


def regular() -> Tetrahedron:
    return regular_tetrahedron()


def isosceles() -> Tetrahedron:
    return isosceles_tetrahedron(1.0, 1.15, 1.3)


FIXTURES = {
    "regular": regular_tetrahedron().points,
    "one_q3": ONE_Q3,
    "pointed_one_q1": POINTED_ONE_Q1,
    "near_regular": near_regular_points(),
    "isosceles": isosceles_tetrahedron(1.0, 1.15, 1.3).points,
    "case_1": CASE_1,
    "case_2_1": CASE_2_1,
    "case_2_2_1": CASE_2_2_1,
    "case_2_2_2": CASE_2_2_2,
    "case_2_2_3": CASE_2_2_3,
    "obtuse_q4": OBTUSE_Q4,
}


def vertex_document(points, **settings) -> dict:
    doc = {"vertices": {v: list(p) for v, p in zip("abcd", points)}}
    if settings:
        doc["settings"] = settings
    return doc
