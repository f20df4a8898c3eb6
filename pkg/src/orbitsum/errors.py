"""Exception hierarchy shared by all orbitsum modules."""


class OrbitsumError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(OrbitsumError):
    """Operands live over different variable sets or have mismatched lengths."""


class UnknownVariableError(OrbitsumError):
    """A variable name is not part of the ambient ring."""


class ZeroPolynomialError(OrbitsumError):
    """An operation that requires a nonzero polynomial received zero."""


class OrderError(OrbitsumError):
    """The supplied monomial order is unsuitable (e.g. not an elimination order)."""


class ParseError(OrbitsumError):
    """Polynomial text could not be parsed."""


class BudgetExceededError(OrbitsumError):
    """A configured resource budget (pair reductions, iteration depth) ran out."""


class PoleError(OrbitsumError):
    """Evaluation hit the u = 0 pole of the (u,v)-plane map."""


class DataIntegrityError(OrbitsumError):
    """A transcribed constant failed its numerical validation."""


class ConvergenceError(OrbitsumError):
    """The root finder did not converge; partial results are attached.

    Attributes:
        partial: whatever census data was available when iteration stopped.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class InvariantViolationError(OrbitsumError):
    """A mathematical invariant the pipeline guarantees was observed to fail."""
