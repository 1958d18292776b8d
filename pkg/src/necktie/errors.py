"""Exception hierarchy shared by the geometry, construction and I/O layers."""
from .scalars import DivisionByZero, ParseError


class GeometryError(Exception):
    """A requested construction is undefined for the given input."""


class CoincidentPoints(GeometryError):
    pass


class CoincidentLines(GeometryError):
    pass


class NotCollinear(GeometryError):
    pass


class NotConcurrent(GeometryError):
    pass


class DegenerateQuadruple(GeometryError):
    pass


class DegenerateFrame(GeometryError):
    pass


class CenterOnTarget(GeometryError):
    pass


class NonUniqueConic(GeometryError):
    pass


class DegenerateConic(GeometryError):
    pass


class DegenerateConfiguration(GeometryError):
    """A named construction step hit a degenerate join or meet."""

    def __init__(self, step: str, cause: Exception | None = None):
        self.step = step
        self.cause = cause
        detail = f" ({type(cause).__name__})" if cause is not None else ""
        super().__init__(f"degenerate at {step}{detail}")


class DegenerateTrace(GeometryError):
    pass


class GenerationExhausted(GeometryError):
    pass


class PointAtInfinity(GeometryError):
    pass


class InvariantError(ValueError):
    """A scene violates a configuration invariant."""


__all__ = [
    "CenterOnTarget", "CoincidentLines", "CoincidentPoints", "DegenerateConfiguration",
    "DegenerateConic", "DegenerateFrame", "DegenerateQuadruple", "DegenerateTrace",
    "DivisionByZero", "GenerationExhausted", "GeometryError", "InvariantError",
    "NonUniqueConic", "NotCollinear", "NotConcurrent", "ParseError", "PointAtInfinity",
]
