"""Exception hierarchy. Each class carries the CLI exit code it maps to."""


class SuperresError(Exception):
    exit_code = 1


class UsageError(SuperresError, ValueError):
    """Bad input: wrong family, non-dominant weight, malformed text."""

    exit_code = 2


class ParameterError(UsageError):
    pass


class ParseError(UsageError):
    pass


class DomainError(UsageError):
    """Operation applied outside its domain (e.g. L-operator on a typical weight)."""


class UnsupportedCase(UsageError):
    """Module shape with no closed form or table support; never extrapolated."""


class InconsistencyError(SuperresError):
    """Lower and upper dimension bounds disagree on the growth degree."""

    exit_code = 3


class InternalError(SuperresError):
    """A self-check failed. Signals a logic bug, not a user error."""

    exit_code = 1
