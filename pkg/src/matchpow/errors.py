"""Exception types raised by matchpow."""


class MatchpowError(Exception):
    """Base class for all library errors."""


class AmbientMismatchError(MatchpowError, ValueError):
    """Two monomials or ideals live in different polynomial rings."""


class ZeroIdealError(MatchpowError, ValueError):
    """An operation that needs a nonzero ideal received the zero ideal."""


class MixedDegreesError(MatchpowError, ValueError):
    """An operation that needs an equigenerated ideal got mixed degrees."""


class NotFullySupportedError(MatchpowError, ValueError):
    """Some variable of the ambient ring divides no generator."""


class CapExceededError(MatchpowError):
    """Input is larger than the configured desk-scale limit."""

    def __init__(self, what, size, cap):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class WeightViolationError(MatchpowError, ValueError):
    """A source vertex of a weighted oriented graph carries weight > 1."""

    def __init__(self, sources):
        self.sources = tuple(sources)
        super().__init__(
            f"source vertices {list(self.sources)} have weight > 1; "
            "sources must have weight 1 (use repair=True to reset them)"
        )


class ParseError(MatchpowError, ValueError):
    """Malformed ideal or graph input."""

    def __init__(self, message, line=None, field=None):
        where = ""
        if line is not None:
            where = f"line {line}: "
        elif field is not None:
            where = f"field {field!r}: "
        super().__init__(where + message)
        self.line = line
        self.field = field
