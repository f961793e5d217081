"""Exception types shared across the package."""


class NumradError(Exception):
    """Base class for all numrad errors."""


class NotHermitian(NumradError):
    """Input matrix is not Hermitian within tolerance."""


class NotPSD(NumradError):
    """Input matrix has an eigenvalue below the PSD clamping window."""


class NoConvergence(NumradError):
    """An iterative routine exhausted its budget without converging."""


class WeightOutOfRange(NumradError):
    """Weight t lies outside the clamped interval [t_min, 1 - t_min]."""


class DomainError(NumradError):
    """Argument outside the mathematical domain of the operation."""


class NonFinite(NumradError):
    """An evaluation produced a non-finite result."""


class ParseError(NumradError):
    """Matrix document could not be parsed."""


class DimensionMismatch(ParseError):
    """Matrix document dimensions are inconsistent."""
