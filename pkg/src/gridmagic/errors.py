"""Exception types shared across the package."""

from __future__ import annotations


class GridMagicError(Exception):
    """Base class for every error raised by this package."""


class DimensionTooSmall(GridMagicError):
    """Fewer than two axes, or a side length below 2."""


class DimensionOrderViolation(GridMagicError):
    """Side lengths not in canonical non-increasing order."""


class Overflow(GridMagicError):
    """A count or label sum would leave the signed 64-bit range."""


class CoordOutOfRange(GridMagicError):
    """A lattice coordinate, rank, axis, or edge base outside the grid."""


class SpecMismatch(GridMagicError):
    """Operands built over different grid specs, or an array of the wrong shape."""


class BudgetExceeded(GridMagicError):
    """Exhaustive search would need more candidate assignments than allowed."""

    def __init__(self, required: int, allowed: int):
        super().__init__(
            f"search needs {required} candidate assignments, budget allows {allowed}"
        )
        self.required = required
        self.allowed = allowed


class ParseError(GridMagicError):
    """Malformed labeling document."""


class VersionMismatch(GridMagicError):
    """Labeling document written under an unsupported format version."""


class UnsupportedDimension(GridMagicError):
    """Render style incompatible with the grid dimension."""


class UsageError(GridMagicError):
    """Bad command line."""
