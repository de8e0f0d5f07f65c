"""Exception hierarchy shared across the package."""


class IdealProjError(Exception):
    """Base class for all errors raised by idealproj."""


class DimensionError(IdealProjError, ValueError):
    """Operands live in different ambient dimensions."""


class ProblemError(IdealProjError, ValueError):
    """An interpolation scheme failed validation.

    ``site`` is the offending site index (0-based) when one can be named.
    """

    def __init__(self, message, site=None):
        if site is not None:
            message = f"site {site}: {message}"
        super().__init__(message)
        self.site = site


class SingularMatrixError(IdealProjError, ArithmeticError):
    """A collocation system has no unique solution."""


class DependentFunctionalsError(IdealProjError, ValueError):
    """The functional list is linearly dependent on the polynomial ring."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class CoincidentPointsError(IdealProjError, ValueError):
    """Two perturbed interpolation points coincide."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class ParseError(IdealProjError, ValueError):
    """Polynomial expression could not be parsed.

    ``position`` is 1-based.
    """

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
