"""Exception hierarchy shared by the library and the CLI exit codes."""


class ScrollDivError(Exception):
    """Base class for all errors raised by scrolldiv."""

    exit_code = 1


class ConfigurationError(ScrollDivError, ValueError):
    """Invalid scroll data, mismatched variable universes, bad CLI flags."""

    exit_code = 2


class CapacityError(ScrollDivError, RuntimeError):
    """A resource cap (e.g. the Buchberger pair budget) was exceeded."""

    exit_code = 3


class IncompleteError(ScrollDivError, RuntimeError):
    """A table could not be certified complete at the requested bound."""

    exit_code = 4


class DomainError(ScrollDivError, ValueError):
    """An operation was called outside its mathematical domain."""


class InvariantViolation(ScrollDivError, AssertionError):
    """A check that the underlying theory guarantees has failed."""
