"""Exception types shared across the toolkit."""


class LatdomError(Exception):
    """Base class for all toolkit errors."""


class ParseError(LatdomError, ValueError):
    """An element literal does not match the owning backend's grammar."""


class BackendMismatchError(LatdomError, ValueError):
    """Operands belong to different backends."""


class FrameInsufficientError(LatdomError):
    """A bounded computation could not be completed or certified within
    the given sample frame (and its permitted enlargements)."""


class UnsupportedQueryError(LatdomError):
    """The backend cannot answer this query (e.g. an infinite answer set)."""


class SuiteSpecError(LatdomError, ValueError):
    """A suite specification names an unknown check or backend."""
