"""Exception types raised across the package."""


class PsvgError(Exception):
    """Base class for all errors raised by this package."""


class EmptyInputError(PsvgError):
    """Input contained no data rows."""


class MalformedValueError(PsvgError):
    """A value cell could not be parsed as a finite real number."""

    def __init__(self, row: int, message: str):
        super().__init__(f"row {row}: {message}")
        self.row = row


class BoundaryNotFoundError(PsvgError):
    """A window boundary label does not occur in the series."""

    def __init__(self, label: str):
        super().__init__(f"boundary label not found in series: {label!r}")
        self.label = label


class WindowTooSmallError(PsvgError):
    """A window resolved to fewer than two samples."""


class SeriesTooShortError(PsvgError):
    """Series is too short for the requested operation."""


class InsufficientPointsError(PsvgError):
    """Fewer than three points remain after filtering; no fit is possible."""


class DegenerateXError(PsvgError):
    """All fit abscissae are equal; the slope is undefined."""


class EmbeddingNotPositiveDefiniteError(PsvgError):
    """Circulant embedding of the target covariance has negative eigenvalues."""
