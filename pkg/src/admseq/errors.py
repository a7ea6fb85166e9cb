"""Exception types shared across the package."""


class AdmseqError(Exception):
    """Base class for all package errors."""


class SequenceError(AdmseqError, ValueError):
    """Malformed weight sequence (negative entries, bad closed form, bad JSON)."""


class KadisonError(AdmseqError, ValueError):
    """The integrality condition on a weight sequence fails where it is required."""


class MajorizationError(AdmseqError, ValueError):
    """A required majorization relation does not hold."""

    def __init__(self, message, failing_index=None):
        super().__init__(message)
        self.failing_index = failing_index


class TraceMismatchError(AdmseqError, ValueError):
    """Total weight and operator trace disagree."""


class DimensionError(AdmseqError, ValueError):
    """Incompatible shapes or ambient dimensions."""


class PlanningError(AdmseqError, RuntimeError):
    """A staged construction could not proceed within its configured limits."""
