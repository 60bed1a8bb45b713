"""Exception hierarchy.

Everything raised on purpose by the library derives from :class:`HNError`,
so callers (the CLI in particular) can separate domain failures from bugs.
"""


class HNError(Exception):
    """Base class for domain errors."""

    kind = "domain"


class UndefinedSlopeError(HNError):
    kind = "undefined-slope"


class SlopeOrderError(HNError):
    kind = "slope-order"


class InvalidPolygonError(HNError):
    kind = "invalid-polygon"


class OutOfRangeError(HNError):
    kind = "out-of-range"


class IncompatibleKernelError(HNError):
    kind = "incompatible-kernel"


class IncompatibleExtensionError(HNError):
    kind = "incompatible-extension"


class BundleSyntaxError(HNError):
    """Malformed bundle text; ``position`` is the 0-based column of the fault."""

    kind = "syntax"

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at column {position})"
        super().__init__(message)
        self.position = position
