"""Semantic exception hierarchy shared across the package."""


class HarmonicDiskError(Exception):
    """Base class for all package-specific errors."""


class DomainError(HarmonicDiskError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class NormalizationError(HarmonicDiskError, ValueError):
    """A series or map violates the required normalization."""


class DocumentError(HarmonicDiskError, ValueError):
    """A map document is malformed.  ``path`` names the offending field."""

    def __init__(self, message: str, path: str = ""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


class DegenerateCurveError(HarmonicDiskError, RuntimeError):
    """A circle image is too degenerate to classify (vanishing value or tangent)."""


class InternalConsistencyError(HarmonicDiskError, RuntimeError):
    """A mathematically guaranteed precondition failed to hold numerically."""
