"""Exception types shared across the package."""


class BanalgError(Exception):
    """Base class for all package errors."""


class AlgebraMismatchError(BanalgError):
    """Two elements do not belong to the same algebra."""


class NotInvertibleError(BanalgError):
    """Element is singular (some eigenvalue below the invertibility threshold)."""


class MembershipError(BanalgError):
    """Matrix does not lie in the span of the algebra basis."""


class SegmentLeavesDomainError(BanalgError):
    """The segment between two points leaves the oracle domain.

    This is a legitimate outcome for maps defined on non-convex open sets,
    not a bug.
    """


class NoConvergenceError(BanalgError):
    """A limit estimate failed its Cauchy test on the finest step."""


class ClassificationFailedError(BanalgError):
    """The oracle is not of canonical conjugation form at the required tolerance."""


class ConfigError(BanalgError):
    """Malformed or inconsistent JSON configuration."""
