"""Exception hierarchy shared by the binlambda modules."""


class BinLambdaError(Exception):
    """Base class for every error raised by this package."""


class DecodeError(BinLambdaError, ValueError):
    """A bit string is not the code of exactly one term."""


class MalformedCode(DecodeError):
    """The bits end (or contain a bad character) before a term is complete."""


class TrailingBits(DecodeError):
    """A complete term was decoded but bits remain after it."""

    def __init__(self, message, consumed):
        super().__init__(message)
        self.consumed = consumed


class TermSyntaxError(BinLambdaError, ValueError):
    """Bad concrete syntax for a term; ``position`` is a 0-based offset."""

    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class RankOutOfRange(BinLambdaError, ValueError):
    pass


class EmptyClass(BinLambdaError, ValueError):
    """No term has the requested size and free-index bound."""


class FreeBoundExceeded(BinLambdaError, ValueError):
    pass


class NoTypableTerm(BinLambdaError, ValueError):
    pass


class DomainError(BinLambdaError, ValueError):
    """A Boltzmann parameter lies outside (0, rho]."""


class AttemptsExhausted(BinLambdaError, RuntimeError):
    pass
