"""Exception hierarchy shared by every plokit module."""


class PLError(Exception):
    """Base class for all plokit errors."""


class NotMonotone(PLError, ValueError):
    pass


class EndpointsNotFixed(PLError, ValueError):
    pass


class OutOfDomain(PLError, ValueError):
    pass


class InvalidInterval(PLError, ValueError):
    pass


class NotAnOrbital(PLError, ValueError):
    pass


class NotInOrbital(PLError, ValueError):
    pass


class NotSameOrbital(PLError, ValueError):
    pass


class ContextOrbitalMismatch(PLError, ValueError):
    pass


class PreconditionViolated(PLError, ValueError):
    """Raised when an operation's input violates a structural precondition.

    ``witness`` carries the offending data (a pair of intervals, a
    certificate, ...) when there is one.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CannotFit(PLError, ValueError):
    pass


class ResourceLimit(PLError, RuntimeError):
    pass


class ParseError(PLError, ValueError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class UnknownSuite(PLError, KeyError):
    def __str__(self):
        return f"unknown suite: {self.args[0]!r}"
