"""Exception hierarchy shared by every module in the package."""


class FareyError(Exception):
    """Base class for all package errors."""


class InvariantError(FareyError, ValueError):
    """An input violates a structural invariant (ordering, reducedness, s range)."""


class FareyOverflowError(FareyError, OverflowError):
    """An intermediate value left the supported machine-word range."""


class ComputationCapExceeded(FareyError):
    """A configured resource cap (order, scan length) would be exceeded."""


class TruncationExhausted(FareyError):
    """A truncated cycle-set enumeration can no longer certify its minimum."""
