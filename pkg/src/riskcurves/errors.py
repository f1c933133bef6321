"""Exception hierarchy shared by all riskcurves modules."""


class RiskCurvesError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(RiskCurvesError, ValueError):
    """Malformed configuration, grid, sample, or constructor input."""


class DomainError(RiskCurvesError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class SingularNormalError(DomainError):
    """The curve has a horizontal tangent at the requested point, so no
    usable normal direction exists there."""


class SolverError(RiskCurvesError):
    """A numerical routine failed to produce a usable result."""


class NoFootError(SolverError):
    """The normal-foot condition has no root inside the curve domain."""


class OutOfRangeError(SolverError):
    """The requested abscissa is not reached by the offset curve."""


class AmbiguousAbscissaError(SolverError):
    """The offset curve passes over the requested abscissa more than once.

    ``candidates`` holds the source parameters of every crossing found.
    """

    def __init__(self, message: str, candidates: tuple[float, ...]):
        super().__init__(message)
        self.candidates = candidates


class DegenerateRangeError(SolverError):
    """Monotonicity filtering left too few points to form a polyline."""
