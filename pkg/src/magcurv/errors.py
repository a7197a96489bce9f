"""Exception types shared across the toolkit."""


class MagcurvError(Exception):
    """Base class for all toolkit errors."""


class ParseError(MagcurvError):
    """Raised for malformed graph documents."""


class ValidationError(MagcurvError):
    """Raised when a graph violates a structural invariant."""


class DimensionError(MagcurvError):
    """Raised when the dimension parameter n is not in (1, inf]."""


class NumericalError(MagcurvError):
    """Raised when an eigensolver fails or a conditioning guard trips."""


class PreconditionError(MagcurvError):
    """Raised when a check's hypothesis (connectivity, unbalancedness, ...) fails.

    The violated hypothesis is named in ``hypothesis``.
    """

    def __init__(self, hypothesis: str, message: str | None = None):
        self.hypothesis = hypothesis
        super().__init__(message or f"hypothesis violated: {hypothesis}")


class SizeError(MagcurvError):
    """Raised when an exact search would exceed its node/assignment budget."""


class EmptySubsetError(MagcurvError):
    """Raised when a vertex-subset argument is empty."""
