"""Exception types shared across the package."""


class VpkError(Exception):
    """Base class for all package-specific errors."""


class DomainError(VpkError):
    """A coordinate fell outside the domain of a warp or projection."""


class ShapeMismatch(VpkError):
    """Two buffers that must share dimensions do not."""


class ShapeError(VpkError):
    """A tensor does not satisfy the shape preconditions of a layout op."""


class UncoveredDirection(VpkError):
    """A resample target direction is not covered by the source; the source
    layout is malformed."""
