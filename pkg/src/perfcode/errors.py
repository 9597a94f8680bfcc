"""Exception hierarchy shared by the library and the CLI."""


class PerfCodeError(Exception):
    """Base class for every error raised by perfcode."""


class ParseError(PerfCodeError, ValueError):
    """Malformed cycle notation or group specification."""


class DegreeMismatchError(PerfCodeError, ValueError):
    pass


class NotInGroupError(PerfCodeError, ValueError):
    """An element or subgroup does not lie in the ambient group."""


class HypothesisError(PerfCodeError, ValueError):
    """A criterion was called outside the hypotheses under which it is valid."""


class BoundExceededError(PerfCodeError):
    """A configured size bound (closure cap, lattice bound, oracle bound) was hit."""
