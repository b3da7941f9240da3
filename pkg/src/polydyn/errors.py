"""Exception types shared across the package."""


class DomainError(ValueError):
    """A precondition of a library operation was violated."""


class ParseError(ValueError):
    """Syntax error in a polynomial expression; carries the offending position."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = "%s (at position %d)" % (message, position)
        super().__init__(message)
