"""Exception hierarchy.

Every error raised deliberately by the library derives from
:class:`ColoringComplexError`, so callers (the CLI in particular) can
separate input problems from programming errors with one ``except``.
"""


class ColoringComplexError(Exception):
    """Base class for all library errors."""


class GuardViolation(ColoringComplexError):
    """A coefficient that must vanish identically came out nonzero."""


class NonIntegralResult(ColoringComplexError):
    """Interpolation produced a non-integer coefficient."""


class CrossCheckFailure(ColoringComplexError):
    """Two independent computations of the same quantity disagree."""


class LimitExceeded(ColoringComplexError, ValueError):
    """A size parameter is beyond what the enumerators support."""


class NoEdges(ColoringComplexError, ValueError):
    """A complex was requested for a graph without edges."""


class VertexOutOfRange(ColoringComplexError, ValueError):
    pass


class EmptyArrangement(ColoringComplexError, ValueError):
    pass


class LengthMismatch(ColoringComplexError, ValueError):
    pass


class NotAComplex(ColoringComplexError, ValueError):
    """A face list is not closed under taking faces."""


class BadChromatic(ColoringComplexError, ValueError):
    """Polynomial cannot be a chromatic polynomial on the given vertex count."""


class DivisibilityViolation(ColoringComplexError):
    pass


class RankMismatch(ColoringComplexError, ValueError):
    pass


class ParseError(ColoringComplexError, ValueError):
    """Malformed graph or arrangement file.

    ``source`` and ``line`` locate the problem; ``str(err)`` is a one-line
    diagnostic suitable for printing as is.
    """

    def __init__(self, message, source="<input>", line=None):
        self.source = source
        self.line = line
        where = source if line is None else f"{source}:{line}"
        super().__init__(f"{where}: {message}")
