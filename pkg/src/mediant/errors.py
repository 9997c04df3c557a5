"""Exception types shared across the package."""


class MediantError(Exception):
    """Base class for all errors raised by this package."""


class ResourceLimitError(MediantError):
    """A census-scale computation exceeded its configured size cap.

    Raised instead of silently churning through a quadratic enumeration
    (or exhausting memory) when the requested bound is above the cap.
    """


class IterationLimitError(MediantError):
    """An approximation engine hit its loop cap before converging.

    Carries the partial work done so far so callers can inspect it.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
