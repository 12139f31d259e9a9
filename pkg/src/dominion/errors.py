"""Exception hierarchy shared by every module of the package."""


class DominionError(Exception):
    """Base class for all errors raised by this package."""


class InvalidFamilyError(DominionError, ValueError):
    """A family generator or closed form was called outside its parameter range."""


class CapacityError(DominionError):
    """A graph or search is larger than the supported capacity."""


class GraphParseError(DominionError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CountOverflowError(DominionError, OverflowError):
    """A count does not fit in an unsigned 128-bit integer."""


class InvalidInputError(DominionError, ValueError):
    pass


class HypothesisViolation(DominionError, ValueError):
    """A closed form was applied to a graph that breaks the formula's hypothesis."""


class SearchTimeout(DominionError):
    """The per-instance time budget ran out before the search finished."""
