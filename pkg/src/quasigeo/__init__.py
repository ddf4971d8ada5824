"""Construct, enumerate and verify simple closed quasigeodesics on tetrahedra."""

from .construct import (
    NoQ1Isosceles, construct_q1, construct_q2, construct_q3, construct_q4, enumerate_all,
    face_fails_at,
)
from .curves import (
    ClosedSurfaceCurve, EdgeCrossing, FaceInterior, VertexAnchor, count_vertices,
    gauss_bonnet_residual, side_angles, verify,
)
from .errors import InternalContradiction, QuasigeoError
from .tetra import (
    AngleTable, Tetrahedron, Tolerance, acute_endpoint_of_longest_edge, classify, face_angles,
    validate,
)
from .unfolding import cut_locus, star_unfold, visible_pairs

__version__ = "0.1.0"

__all__ = [
    "AngleTable", "ClosedSurfaceCurve", "acute_endpoint_of_longest_edge", "EdgeCrossing", "FaceInterior", "InternalContradiction",
    "NoQ1Isosceles", "QuasigeoError", "Tetrahedron", "Tolerance", "VertexAnchor", "classify",
    "construct_q1", "construct_q2", "construct_q3", "construct_q4", "count_vertices",
    "cut_locus", "enumerate_all", "face_angles", "face_fails_at", "gauss_bonnet_residual",
    "side_angles", "star_unfold", "validate", "verify", "visible_pairs",
]
