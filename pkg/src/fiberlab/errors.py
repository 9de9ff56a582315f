"""Exception hierarchy shared by all fiberlab modules."""


class FiberlabError(Exception):
    """Base class for all errors raised by this package."""


class GrammarError(FiberlabError):
    """Malformed input text (ring declarations, monomials, definition files).

    Carries a character position when one is known.
    """

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class RingMismatchError(FiberlabError):
    """Operands live in different polynomial rings."""


class DomainError(FiberlabError):
    """Input outside an operation's domain (zero ideal, bad exponent, ...)."""


class CapError(FiberlabError):
    """A configured hard resource cap was exceeded.

    Caps abort the computation; they never silently truncate a result.
    """
