"""Exception hierarchy shared by all modules."""


class QuasigeoError(Exception):
    """Base class for every error raised by the package."""


class InputError(QuasigeoError):
    """Malformed or unusable input (maps to CLI exit code 2)."""


class DegenerateInput(InputError):
    """Coincident or collinear vertices."""


class FlatTetrahedron(InputError):
    """Zero volume while flat inputs are not allowed."""


class NonRealizable(InputError):
    """An angle-only tetrahedron was passed to an operation needing lengths."""


class MalformedCurve(QuasigeoError):
    pass


class AnchorNotOnCurve(QuasigeoError):
    pass


class NonSimpleCurve(QuasigeoError):
    pass


class VertexNotOnFace(QuasigeoError):
    pass


class NonAdjacentFaces(QuasigeoError):
    pass


class NumericalDegeneracy(QuasigeoError):
    pass


class DegenerateDirection(QuasigeoError):
    """A traced ray runs (numerically) along an edge."""


class InternalContradiction(QuasigeoError):
    """A proven statement failed numerically; signals a tolerance bug."""


class IoFailure(QuasigeoError):
    """Writing an export file failed."""
